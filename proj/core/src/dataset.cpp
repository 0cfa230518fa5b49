#include "resir/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "resir/error.hpp"

namespace resir {
namespace {

[[noreturn]] void data_error(const std::string& path, std::size_t row,
                             const std::string& what) {
  throw Error("data-format", path + ":" + std::to_string(row) + ": " + what);
}

int parse_int(const std::string& text, const std::string& path, std::size_t row,
              const char* field) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    data_error(path, row, std::string("cannot parse ") + field + " '" + text + "'");
  }
  return value;
}

} // namespace

DisasterSeries load_disaster_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open data file '" + path + "'");

  std::string line;
  std::size_t row = 0;
  if (!std::getline(in, line)) throw Error("data-format", path + ": empty file");
  ++row;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "year,count") {
    data_error(path, row, "expected header 'year,count', got '" + line + "'");
  }

  DisasterSeries series;
  series.counts.reserve(kDisasterYears);
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) data_error(path, row, "expected 'year,count'");
    const int year = parse_int(line.substr(0, comma), path, row, "year");
    const int count = parse_int(line.substr(comma + 1), path, row, "count");
    const int expected_year = series.first_year + static_cast<int>(series.counts.size());
    if (year != expected_year) {
      data_error(path, row,
                 "expected year " + std::to_string(expected_year) + ", got " +
                     std::to_string(year));
    }
    if (count < 0) data_error(path, row, "negative count");
    series.counts.push_back(count);
  }

  if (series.counts.size() != kDisasterYears) {
    throw Error("data-format",
                path + ": expected " + std::to_string(kDisasterYears) +
                    " yearly rows, got " + std::to_string(series.counts.size()));
  }
  return series;
}

} // namespace resir
