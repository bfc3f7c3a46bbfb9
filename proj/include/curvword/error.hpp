#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvword {

enum class ErrorKind {
  InvalidInput,
  UnknownCharacter,
  MissingCharacter,
  NotAnNWord,
  SizeMismatch,
  DegreeMismatch,
  InvalidBundle,
  DegenerateFiber,
  ValidationGap,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` drives the CLI's
/// structured error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace curvword
