#pragma once

namespace trimode {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace trimode
