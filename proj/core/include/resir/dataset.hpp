#pragma once

#include <string>

#include "resir/changepoint.hpp"

namespace resir {

/// Reads a `year,count` CSV (UTF-8, header line, LF endings) and validates
/// it as the coal-mining disaster series: exactly 112 consecutive years
/// starting 1851, all counts nonnegative. Errors carry the offending row
/// number.
DisasterSeries load_disaster_data(const std::string& path);

} // namespace resir
