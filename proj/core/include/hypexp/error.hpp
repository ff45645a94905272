#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypexp {

enum class ErrorKind {
  NonPrime,
  ReducibleModulus,
  ZeroArgument,
  NotRational,
  MismatchedRing,
  ZeroValue,
  ZeroPoint,
  OrderNotSplit,
  IncompleteTable,
  BadCaseParameters,
  InvalidParams,
  SchemaError,
  InvariantViolation,
  MissingPowerMap,
  PrecisionExhausted,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace hypexp
