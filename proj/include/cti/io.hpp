#pragma once

#include "cti/calibration.hpp"
#include "cti/policy.hpp"
#include "cti/series.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace cti {

/// Parses `country,year,share` CSV (header mandatory, UTF-8, LF or CRLF).
/// Shares given in percent are divided by 100. All malformed rows are
/// reported together, with line numbers; nothing partial is returned.
std::vector<CountrySeries> load_series(std::istream& in, ShareUnit unit);
std::vector<CountrySeries> load_series_file(const std::filesystem::path& path, ShareUnit unit);

// Parameter, report, scenario and run-config documents are JSON with
// unit-bearing key names (alpha_per_year, T_years, ...). Loading a saved
// value yields the identical value, bit for bit.
void save_params(const std::filesystem::path& path, const ShareCurveParams& params);
ShareCurveParams load_params(const std::filesystem::path& path);

void save_report(const std::filesystem::path& path, const CalibrationReport& report);
CalibrationReport load_report(const std::filesystem::path& path);

void save_scenario(const std::filesystem::path& path, const Scenario& scenario);
Scenario load_scenario(const std::filesystem::path& path);

RunConfig load_run_config(const std::filesystem::path& path);

/// Tries the path argument first, then the CTI_CONFIG environment
/// variable, then built-in defaults.
RunConfig resolve_run_config(const std::string& config_flag);

using Cell = std::variant<long long, double, std::string>;

/// CSV with a fixed column order, 6-significant-digit numbers, LF line
/// endings and a trailing newline. Returns the byte count written.
std::size_t write_table(const std::vector<std::string>& columns,
                        const std::vector<std::vector<Cell>>& rows, std::ostream& out);
std::size_t write_table_file(const std::filesystem::path& path,
                             const std::vector<std::string>& columns,
                             const std::vector<std::vector<Cell>>& rows);

/// Fixed-format number rendering used for all emitted tables ("%.6g").
std::string format_number(double value);

/// Writes content to `path` atomically (temp file + rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace cti
