#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace resir {

/// Library error with a short machine-readable code ("bad-parameter",
/// "degenerate-pool", "data-format", "config-parse", "io", ...) alongside
/// the human-readable message. The CLI prints the code on stderr and maps
/// it to a nonzero exit status.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void throw_bad_parameter(const std::string& message) {
  throw Error("bad-parameter", message);
}

} // namespace resir
