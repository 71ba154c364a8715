#include "symdisc/realization.hpp"

#include <cmath>
#include <string>

#include "symdisc/error.hpp"
#include "symdisc/rif.hpp"
#include "symdisc/rng.hpp"
#include "symdisc/sympoly.hpp"

namespace symdisc {

ComplexMatrix Colligation::block() const {
  ComplexMatrix v(M() + h(), N() + h());
  v.set_block(0, 0, A);
  v.set_block(0, N(), B);
  v.set_block(M(), 0, C);
  v.set_block(M(), N(), D);
  return v;
}

Colligation Colligation::from_block(const ComplexMatrix& v, const ComplexMatrix& tau,
                                    std::size_t m, std::size_t n) {
  const std::size_t h = tau.rows();
  if (v.rows() != m + h || v.cols() != n + h) {
    throw Error(ErrorCode::ShapeMismatch, "block matrix is " + std::to_string(v.rows()) + "x" +
                                              std::to_string(v.cols()) + ", expected " +
                                              std::to_string(m + h) + "x" +
                                              std::to_string(n + h));
  }
  Colligation c;
  c.tau = tau;
  c.A = v.block(0, 0, m, n);
  c.B = v.block(0, n, m, h);
  c.C = v.block(m, 0, h, n);
  c.D = v.block(m, n, h, h);
  return c;
}

void Colligation::validate() const {
  const std::size_t m = M(), n = N(), hh = h();
  if (!tau.is_square() || B.rows() != m || B.cols() != hh || C.rows() != hh || C.cols() != n ||
      D.rows() != hh || D.cols() != hh) {
    throw Error(ErrorCode::ShapeMismatch, "colligation blocks have inconsistent shapes");
  }
  const double r = isometry_residual(tau);
  if (r > 1e-10) throw Error(ErrorCode::DomainError, "tau is not unitary", r);
}

ComplexMatrix phi(const ComplexMatrix& tau, Complex s, Complex p) {
  if (!tau.is_square()) throw Error(ErrorCode::ShapeMismatch, "tau must be square");
  if (!(std::abs(s) < 2.0)) throw Error(ErrorCode::DomainError, "|s| >= 2", std::abs(s));
  const std::size_t h = tau.rows();
  const ComplexMatrix eye = ComplexMatrix::identity(h);
  // The two factors are functions of tau and commute.
  return linalg::solve(2.0 * eye - s * tau, (2.0 * p) * tau - s * eye);
}

ComplexMatrix eval_tfr(const Colligation& v, Complex s, Complex p, double max_condition) {
  if (!in_Gd_closure({s, p}, 1e-12)) {
    throw Error(ErrorCode::DomainError, "point is outside the closed symmetrized bidisc");
  }
  if (v.h() == 0) return v.A;
  const ComplexMatrix f = phi(v.tau, s, p);
  const ComplexMatrix lhs = ComplexMatrix::identity(v.h()) - v.D * f;
  return v.A + v.B * (f * linalg::solve(lhs, v.C, max_condition));
}

ColligationReport check_colligation(const Colligation& v) {
  const ComplexMatrix b = v.block();
  return {isometry_residual(b), coisometry_residual(b), isometry_residual(v.tau)};
}

Colligation adjoint_tfr(const Colligation& v) {
  Colligation out;
  out.tau = v.tau.adjoint();
  out.A = v.A.adjoint();
  out.B = v.C.adjoint();
  out.C = v.B.adjoint();
  out.D = v.D.adjoint();
  return out;
}

Embedding embed_in_inner(const Colligation& v, double tol) {
  const std::size_t m = v.M(), n = v.N(), h = v.h();
  Embedding out;
  const ColligationReport rep = check_colligation(v);
  if (m == n && rep.isometry_residual <= tol && rep.coisometry_residual <= tol) {
    out.W = v;
    for (std::size_t i = 0; i < m; ++i) out.rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) out.cols.push_back(j);
    return out;
  }
  // Dilation rows: [A; C; extra (N + h)], columns: [A; B; extra (M + h)].
  // Output/input space of the new colligation is everything except the
  // state block, with Psi's indices first.
  const ComplexMatrix w = linalg::unitary_dilation(v.block(), tol);
  const std::size_t l = m + n + h;
  std::vector<std::size_t> row_order, col_order;
  for (std::size_t i = 0; i < m; ++i) row_order.push_back(i);
  for (std::size_t i = 0; i < n + h; ++i) row_order.push_back(m + h + i);
  for (std::size_t i = 0; i < h; ++i) row_order.push_back(m + i);
  for (std::size_t j = 0; j < n; ++j) col_order.push_back(j);
  for (std::size_t j = 0; j < m + h; ++j) col_order.push_back(n + h + j);
  for (std::size_t j = 0; j < h; ++j) col_order.push_back(n + j);
  ComplexMatrix arranged(l + h, l + h);
  for (std::size_t i = 0; i < l + h; ++i)
    for (std::size_t j = 0; j < l + h; ++j) arranged(i, j) = w(row_order[i], col_order[j]);
  out.W = Colligation::from_block(arranged, v.tau, l, l);
  for (std::size_t i = 0; i < m; ++i) out.rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) out.cols.push_back(j);
  return out;
}

double schur_norm_estimate(const Colligation& v, std::size_t count, std::uint64_t seed,
                           unsigned threads) {
  const std::vector<GdPoint> pts = sample_Gd(2, count, seed);
  return parallel_max(pts.size(), threads, [&](std::size_t i) {
    return linalg::operator_norm(eval_tfr(v, pts[i][0], pts[i][1]));
  });
}

}  // namespace symdisc
