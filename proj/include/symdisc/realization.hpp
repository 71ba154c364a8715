#pragma once

#include <cstdint>
#include <vector>

#include "symdisc/linalg.hpp"
#include "symdisc/matrix.hpp"

namespace symdisc {

/// Unitary tau (h x h) and V = [[A, B], [C, D]] with A: M x N, B: M x h,
/// C: h x N, D: h x h. The transfer function is
///   Psi(s, p) = A + B phi (I - D phi)^(-1) C,  phi = phi(tau, s, p).
struct Colligation {
  ComplexMatrix tau, A, B, C, D;

  std::size_t M() const noexcept { return A.rows(); }
  std::size_t N() const noexcept { return A.cols(); }
  std::size_t h() const noexcept { return tau.rows(); }

  /// The (M + h) x (N + h) block matrix V.
  ComplexMatrix block() const;
  static Colligation from_block(const ComplexMatrix& v, const ComplexMatrix& tau, std::size_t m,
                                std::size_t n);

  /// Block shapes agree and tau is unitary within 1e-10. Contractivity of
  /// V is not enforced here. Throws ShapeMismatch, DomainError.
  void validate() const;
};

/// (2p tau - s I)(2I - s tau)^(-1). Throws DomainError if |s| >= 2 and
/// Singular if 2I - s tau is numerically singular.
ComplexMatrix phi(const ComplexMatrix& tau, Complex s, Complex p);

/// Accepts (s, p) in the closure of G (roots within 1 + 1e-12), so that
/// boundary values can be sampled. Throws DomainError outside, Singular
/// when cond(I - D phi) > max_condition.
ComplexMatrix eval_tfr(const Colligation& v, Complex s, Complex p,
                       double max_condition = linalg::kMaxCondition);

struct ColligationReport {
  double isometry_residual;    ///< max |V^H V - I|
  double coisometry_residual;  ///< max |V V^H - I|
  double tau_residual;         ///< max |tau^H tau - I|
};

ColligationReport check_colligation(const Colligation& v);

/// Block matrix V^H with tau^H; evaluates to Psi(conj s, conj p)^H.
Colligation adjoint_tfr(const Colligation& v);

struct Embedding {
  Colligation W;
  std::vector<std::size_t> rows;  ///< output indices of Psi inside W's TFR
  std::vector<std::size_t> cols;  ///< input indices
};

/// Unitary colligation whose L x L transfer function carries Psi in its
/// top-left M x N corner, L = M + N + h. Same tau and state size. Returns
/// v itself when v is already unitary. Throws NotContraction.
Embedding embed_in_inner(const Colligation& v, double tol = 1e-9);

/// Max operator norm of Psi over `count` points of G.
double schur_norm_estimate(const Colligation& v, std::size_t count, std::uint64_t seed,
                           unsigned threads = 1);

}  // namespace symdisc
