#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ttl {

enum class ErrorKind {
  OutOfRange,
  NotApplicable,
  NotALink,
  Unsupported,
  NotThisCase,
  UnsupportedShape,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; the
// kind tells callers which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ttl
