#include "symdisc/error.hpp"

namespace symdisc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::GramMismatch: return "GramMismatch";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::NotContraction: return "NotContraction";
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ZeroInDomain: return "ZeroInDomain";
    case ErrorCode::UnimodularityError: return "UnimodularityError";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InterpolationResidual: return "InterpolationResidual";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotIsometric: return "NotIsometric";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail, double residual)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail),
      residual_(residual) {}

}  // namespace symdisc
