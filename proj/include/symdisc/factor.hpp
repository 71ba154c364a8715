#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symdisc/realization.hpp"

namespace symdisc {

/// Colligation with state space H1 (+) H2 and
///   V = [[A,  B1, B2],
///        [C1, D1, D2],
///        [C2, 0,  D3]],   tau = diag(tau1, tau2).
struct StructuredColligation {
  Colligation V;
  std::size_t h1 = 0, h2 = 0;

  ComplexMatrix B1() const { return V.B.block(0, 0, V.M(), h1); }
  ComplexMatrix B2() const { return V.B.block(0, h1, V.M(), h2); }
  ComplexMatrix C1() const { return V.C.block(0, 0, h1, V.N()); }
  ComplexMatrix C2() const { return V.C.block(h1, 0, h2, V.N()); }
  ComplexMatrix D1() const { return V.D.block(0, 0, h1, h1); }
  ComplexMatrix D2() const { return V.D.block(0, h1, h1, h2); }
  ComplexMatrix D3() const { return V.D.block(h1, h1, h2, h2); }
  ComplexMatrix tau1() const { return V.tau.block(0, 0, h1, h1); }
  ComplexMatrix tau2() const { return V.tau.block(h1, h1, h2, h2); }

  /// Split sizes add up, the lower-left D block is exactly zero and the
  /// off-diagonal tau blocks are <= 1e-12. Throws ShapeMismatch,
  /// ConditionViolated. Isometry is checked separately.
  void validate() const;
};

/// Block formula for psi1 * psi2. Throws ShapeMismatch if the inner
/// dimensions differ, NotIsometric if either input is not isometric
/// within tol.
StructuredColligation compose_colligations(const Colligation& v1, const Colligation& v2,
                                           double tol = 1e-8);

enum class FactorVariant { Invertible, ZeroSelfadjoint, ZeroZero };

FactorVariant parse_variant(const std::string& name);
std::string to_string(FactorVariant v);

/// Variant data: A1, A2 for Invertible; A for ZeroSelfadjoint; X, Y for
/// ZeroZero. Empty matrices mean "use the canonical choice" where one
/// exists (A2 = (A^H A + C1^H C1)^(1/2), A1 = A A2^(-1); A = (C1^H C1)^(1/2)).
struct FactorAux {
  ComplexMatrix A1, A2, A, X, Y;
};

struct ConditionResidual {
  std::string name;
  double residual;
};

struct FactorReport {
  std::vector<ConditionResidual> residuals;
  double max() const;
};

/// Residuals of the variant's defining conditions in max-entry norm.
/// Throws ShapeMismatch; NotInvertible when a canonical aux needs an
/// inverse that does not exist.
FactorReport check_factor_conditions(const StructuredColligation& v, FactorVariant variant,
                                     const FactorAux& aux = {});

std::pair<Colligation, Colligation> split_invertible(const StructuredColligation& v,
                                                     double tol = 1e-8);
std::pair<Colligation, Colligation> split_zero_selfadjoint(const StructuredColligation& v,
                                                           double tol = 1e-8);
std::pair<Colligation, Colligation> split_zero_zero(const StructuredColligation& v,
                                                    const ComplexMatrix& x,
                                                    const ComplexMatrix& y, double tol = 1e-8);

}  // namespace symdisc
