#pragma once

#include "config.hpp"

namespace trimode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSingular = 3;
inline constexpr int kExitDiverged = 4;
inline constexpr int kExitIo = 5;

/// Executes a resolved configuration: computes, writes the output file and
/// the `<out>.meta.json` sidecar and prints warnings to stderr. Throws the
/// typed errors; returns kExitOk.
int run(const RunConfig& config);

/// Full command-line entry point (argv parsing, presets, config file,
/// overrides, TRIMODE_THREADS cap). Returns a process exit code.
int dispatch(int argc, const char* const* argv);

}  // namespace trimode::cli
