#pragma once

namespace resir {

inline constexpr const char* version = "0.1.0";

} // namespace resir
