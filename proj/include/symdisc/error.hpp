#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symdisc {

/// Stable error codes shared by the library and the command-line front end.
enum class ErrorCode {
  NotPSD,
  NotHermitian,
  GramMismatch,
  DimensionError,
  NotContraction,
  DegreeError,
  NotSymmetric,
  ZeroInDomain,
  UnimodularityError,
  PoleHit,
  Singular,
  DomainError,
  Infeasible,
  InterpolationResidual,
  ShapeMismatch,
  NotIsometric,
  NotInvertible,
  ConditionViolated,
  SchemaError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every domain failure in the library is reported through this type.
/// `residual()` is NaN unless the failing check measured a residual.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        double residual = std::numeric_limits<double>::quiet_NaN());

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  double residual() const noexcept { return residual_; }

 private:
  ErrorCode code_;
  std::string detail_;
  double residual_;
};

}  // namespace symdisc
