#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace trimode::cli {

/// Names of the built-in parameter presets, in a stable order.
const std::vector<std::string>& preset_names();

/// Key/value entries of one preset; throws ConfigError for unknown names.
/// Presets fix parameters and grids only -- the command stays the caller's
/// choice.
std::vector<Entry> preset_entries(const std::string& name);

}  // namespace trimode::cli
