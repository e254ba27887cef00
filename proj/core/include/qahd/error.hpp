#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qahd {

enum class ErrorKind {
  InvalidTerm,
  NonPositiveScale,
  NotDifferentiableInLambda,
  Unsupported,
  PreconditionViolation,
  QuadratureFailure,
  PoleArgument,
  BranchUnsupported,
  ZeroFrequency,
  IllConditioned,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above, so
/// front ends can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qahd
