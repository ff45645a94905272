#include "hypexp/error.hpp"

namespace hypexp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::MismatchedRing: return "MismatchedRing";
    case ErrorKind::ZeroValue: return "ZeroValue";
    case ErrorKind::ZeroPoint: return "ZeroPoint";
    case ErrorKind::OrderNotSplit: return "OrderNotSplit";
    case ErrorKind::IncompleteTable: return "IncompleteTable";
    case ErrorKind::BadCaseParameters: return "BadCaseParameters";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::MissingPowerMap: return "MissingPowerMap";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hypexp
