#include "resir/report.hpp"

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "resir/error.hpp"
#include "resir/version.hpp"

namespace resir {
namespace {

std::string format_number(const char* fmt, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), fmt, value);
  return buffer;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string json_escape(const std::string& text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string cell_to_csv(const Report::Cell& cell) {
  if (const auto* text = std::get_if<std::string>(&cell)) return csv_escape(*text);
  if (const auto* integer = std::get_if<std::int64_t>(&cell))
    return std::to_string(*integer);
  return format_csv_number(std::get<double>(cell));
}

std::string cell_to_json(const Report::Cell& cell) {
  if (const auto* text = std::get_if<std::string>(&cell)) return json_escape(*text);
  if (const auto* integer = std::get_if<std::int64_t>(&cell))
    return std::to_string(*integer);
  return format_json_number(std::get<double>(cell));
}

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

} // namespace

std::string format_csv_number(double value) { return format_number("%.6g", value); }
std::string format_json_number(double value) { return format_number("%.17g", value); }

std::string csv_body(const Report& report) {
  std::ostringstream out;
  for (std::size_t j = 0; j < report.columns.size(); ++j) {
    if (j) out << ',';
    out << csv_escape(report.columns[j]);
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << cell_to_csv(row[j]);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "# resir " << version << " report\n";
  out << "# experiment: " << report.experiment << '\n';
  for (const auto& [key, value] : report.metadata) {
    out << "# " << key << ": " << value << '\n';
  }
  out << "# generated-at: " << timestamp_utc() << '\n';
  out << csv_body(report);
  return out.str();
}

std::string json_body(const Report& report) {
  std::ostringstream out;
  out << "{\"columns\":[";
  for (std::size_t j = 0; j < report.columns.size(); ++j) {
    if (j) out << ',';
    out << json_escape(report.columns[j]);
  }
  out << "],\"rows\":[";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < report.rows[i].size(); ++j) {
      if (j) out << ',';
      out << cell_to_json(report.rows[i][j]);
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

std::string to_json(const Report& report) {
  std::ostringstream out;
  out << "{\"schema_version\":1,";
  out << "\"tool\":\"resir\",\"version\":" << json_escape(version) << ',';
  out << "\"experiment\":" << json_escape(report.experiment) << ',';
  out << "\"metadata\":{";
  out << "\"generated_at\":" << json_escape(timestamp_utc());
  for (const auto& [key, value] : report.metadata) {
    out << ',' << json_escape(key) << ':' << json_escape(value);
  }
  out << "},\"body\":" << json_body(report) << '}';
  return out.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io", "cannot write '" + temp + "'");
    out << content;
    if (!out) throw Error("io", "short write to '" + temp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw Error("io", "cannot rename '" + temp + "' to '" + path + "': " + ec.message());
  }
}

void write_report(const Report& report, const std::string& path, OutputFormat format) {
  write_text_atomic(path, format == OutputFormat::Csv ? to_csv(report) : to_json(report));
}

void emit_plot_data(const Report& report, const std::string& path) {
  emit_series_csv(report.plot_header, report.plot_rows, path);
}

void emit_series_csv(const std::array<std::string, 2>& header,
                     const std::vector<std::array<std::string, 2>>& rows,
                     const std::string& path) {
  std::ostringstream out;
  out << csv_escape(header[0]) << ',' << csv_escape(header[1]) << '\n';
  for (const auto& row : rows) {
    out << csv_escape(row[0]) << ',' << csv_escape(row[1]) << '\n';
  }
  write_text_atomic(path, out.str());
}

} // namespace resir
