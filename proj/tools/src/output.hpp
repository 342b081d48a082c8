#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace trimode::cli {

/// Shortest exact decimal representation (round-trips to the same double).
std::string format_double(double value);

/// 17 significant digits, locale-independent; used for CSV cells.
std::string format_double17(double value);

/// CSV table with a header row, comma separators and \n line endings.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::span<const double>>& columns);

/// Same data as a JSON object of arrays, keys in column order.
nlohmann::ordered_json json_table(const std::vector<std::string>& header,
                                  const std::vector<std::span<const double>>& columns);

/// Flat JSON record of the fully resolved configuration plus tool/version;
/// parse_config accepts it back (round-trip).
nlohmann::ordered_json sidecar_json(const RunConfig& config);

/// Writes bytes to `path`; throws IoError on failure.
void write_file(const std::string& path, const std::string& contents);

}  // namespace trimode::cli
