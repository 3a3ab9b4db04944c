#include "ecag/error.hpp"

namespace ecag {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::UnsupportedCurve: return "UnsupportedCurve";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::PoleAtInfinity: return "PoleAtInfinity";
    case ErrorKind::PoleAtQ: return "PoleAtQ";
    case ErrorKind::InvalidDivisor: return "InvalidDivisor";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::EvaluationError: return "EvaluationError";
    case ErrorKind::SearchFailed: return "SearchFailed";
    case ErrorKind::OrderCheckFailed: return "OrderCheckFailed";
    case ErrorKind::UseOnePointVariant: return "UseOnePointVariant";
    case ErrorKind::DegenerateDimension: return "DegenerateDimension";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::WrongVariant: return "WrongVariant";
  }
  return "Unknown";
}

}  // namespace ecag
