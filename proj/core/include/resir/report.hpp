#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "resir/config.hpp"

namespace resir {

/// A rendered experiment result: a small table plus metadata. The body
/// (columns + rows) is byte-reproducible for a fixed config and seed;
/// volatile values (timestamps, wall times) live in the metadata only.
struct Report {
  using Cell = std::variant<std::string, std::int64_t, double>;

  std::string experiment;
  std::vector<std::pair<std::string, std::string>> metadata; // config echo
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::array<std::string, 2> plot_header{};          // e.g. {"scheme", "omse"}
  std::vector<std::array<std::string, 2>> plot_rows; // plottable x,y series
};

/// CSV body only: header row + data rows, 6 significant digits, RFC-4180
/// quoting for fields containing commas.
std::string csv_body(const Report& report);

/// Full CSV: '#'-prefixed metadata (tool version, config echo, generation
/// timestamp) followed by the body.
std::string to_csv(const Report& report);

/// JSON body only: {"columns": [...], "rows": [[...], ...]} with numbers at
/// 17 significant digits (lossless for doubles).
std::string json_body(const Report& report);

/// Full JSON: schema_version, metadata object (including the timestamp) and
/// the body fields.
std::string to_json(const Report& report);

std::string format_csv_number(double value);  // %.6g
std::string format_json_number(double value); // %.17g

/// Writes content via a temp file + rename so readers never see a torn file.
void write_text_atomic(const std::string& path, const std::string& content);

/// Renders and writes the report in the requested format.
void write_report(const Report& report, const std::string& path, OutputFormat format);

/// Writes the report's plot series as a two-column CSV.
void emit_plot_data(const Report& report, const std::string& path);

/// Writes an arbitrary two-column series (e.g. year,count) as CSV.
void emit_series_csv(const std::array<std::string, 2>& header,
                     const std::vector<std::array<std::string, 2>>& rows,
                     const std::string& path);

} // namespace resir
