#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trimode/errors.hpp"
#include "trimode/model.hpp"
#include "trimode/stochastic.hpp"

namespace trimode::cli {

/// Bad or missing configuration input; maps to exit code 2.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Output file could not be written; maps to exit code 5.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    long count = 0;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Fully resolved run description shared by the CLI, the sidecar round-trip
/// and the acceptance suite.
struct RunConfig {
    std::string command;  // steady | response | flucspec | stochastic | detect
    SystemParams params;
    bool degenerate = true;
    std::optional<GridSpec> grid;
    SimulationConfig sim{};  // populated for the stochastic command
    std::string out;
    std::string format;              // csv | json
    std::string source = "response"; // detect input: response | flucspec
    double prominence = 0.02;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Raw key/value pair with the source line for error messages (0 = no line).
struct Entry {
    std::string key;
    std::string value;
    int line = 0;
};

/// Splits a flat key=value document (one pair per line, `#` comments) or a
/// flat JSON object (as written to the sidecar) into entries.
std::vector<Entry> entries_from_text(const std::string& text);

/// Validates entries and resolves them into a RunConfig. Later entries
/// override earlier ones. Unknown keys are errors.
RunConfig build_config(const std::vector<Entry>& entries);

/// entries_from_text followed by build_config.
RunConfig parse_config(const std::string& text);

}  // namespace trimode::cli
