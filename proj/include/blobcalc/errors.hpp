#pragma once

#include <stdexcept>
#include <string>

namespace blobcalc {

/// Domain-rule violation. `code()` is a stable machine-readable name
/// ("EvenL", "OnWall", "BoundExceeded", ...) used by the CLI and bindings.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
  throw DomainError(code, msg);
}

} // namespace blobcalc
