#pragma once

// Test-side generators and oracles. The oracles (phi_scalar, tfr_oracle)
// use no library arithmetic beyond ComplexMatrix products.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "symdisc/matrix.hpp"
#include "symdisc/pick.hpp"
#include "symdisc/realization.hpp"
#include "symdisc/rng.hpp"
#include "symdisc/sympoly.hpp"

namespace testsupport {

using symdisc::Complex;
using symdisc::ComplexMatrix;

inline ComplexMatrix gaussian(symdisc::Rng& rng, std::size_t r, std::size_t c) {
  ComplexMatrix m(r, c);
  for (auto& z : m.data()) z = rng.complex_normal();
  return m;
}

/// First `cols` columns of a random unitary (modified Gram-Schmidt, twice).
inline ComplexMatrix random_isometry(symdisc::Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix q = gaussian(rng, rows, cols);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot{};
        for (std::size_t i = 0; i < rows; ++i) dot += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < rows; ++i) q(i, j) -= dot * q(i, k);
      }
      double nrm = 0.0;
      for (std::size_t i = 0; i < rows; ++i) nrm += std::norm(q(i, j));
      nrm = std::sqrt(nrm);
      for (std::size_t i = 0; i < rows; ++i) q(i, j) /= nrm;
    }
  }
  return q;
}

inline ComplexMatrix random_unitary(symdisc::Rng& rng, std::size_t n) {
  return random_isometry(rng, n, n);
}

/// Frobenius-normalized random matrix scaled by `scale` (so norm <= scale).
inline ComplexMatrix random_contraction(symdisc::Rng& rng, std::size_t r, std::size_t c,
                                        double scale = 0.95) {
  ComplexMatrix m = gaussian(rng, r, c);
  double f = 0.0;
  for (const auto& z : m.data()) f += std::norm(z);
  if (f > 0.0) m *= scale / std::sqrt(f);
  return m;
}

/// Isometric block matrix when m >= n; for m < n the adjoint of an
/// isometric one (co-isometric), which is the Schur-class case there.
inline symdisc::Colligation random_isometric_colligation(symdisc::Rng& rng, std::size_t m,
                                                         std::size_t n, std::size_t h) {
  if (m < n) return symdisc::adjoint_tfr(random_isometric_colligation(rng, n, m, h));
  const ComplexMatrix v = random_isometry(rng, m + h, n + h);
  return symdisc::Colligation::from_block(v, random_unitary(rng, h), m, n);
}

inline symdisc::Colligation random_unitary_colligation(symdisc::Rng& rng, std::size_t n,
                                                       std::size_t h) {
  return random_isometric_colligation(rng, n, n, h);
}

/// Colligation with a contractive but non-isometric block matrix.
inline symdisc::Colligation random_contractive_colligation(symdisc::Rng& rng, std::size_t m,
                                                           std::size_t n, std::size_t h) {
  const ComplexMatrix v = random_contraction(rng, m + h, n + h, 0.9);
  return symdisc::Colligation::from_block(v, random_unitary(rng, h), m, n);
}

/// pi(z1, z2) for z uniform in the bidisc of the given radius.
inline symdisc::GdPoint random_G_point(symdisc::Rng& rng, double radius = 1.0) {
  const Complex z1 = radius * rng.unit_disc();
  const Complex z2 = radius * rng.unit_disc();
  return {z1 + z2, z1 * z2};
}

/// Direct evaluation of phi by the scalar formula when tau is 1 x 1.
inline Complex phi_scalar(Complex t, Complex s, Complex p) {
  return (2.0 * p * t - s) / (2.0 - s * t);
}

/// A + B phi (I - D phi)^(-1) C using a Neumann-free Gauss-Jordan solve,
/// independent of the library's LU.
inline ComplexMatrix tfr_oracle(const symdisc::Colligation& v, const ComplexMatrix& phi) {
  const std::size_t h = v.h();
  if (h == 0) return v.A;
  ComplexMatrix lhs = ComplexMatrix::identity(h) - v.D * phi;
  ComplexMatrix rhs = v.C;
  // Gauss-Jordan with partial pivoting on [lhs | rhs].
  for (std::size_t col = 0; col < h; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < h; ++r)
      if (std::abs(lhs(r, col)) > std::abs(lhs(piv, col))) piv = r;
    for (std::size_t c = 0; c < h; ++c) std::swap(lhs(col, c), lhs(piv, c));
    for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(col, c), rhs(piv, c));
    const Complex d = lhs(col, col);
    for (std::size_t c = 0; c < h; ++c) lhs(col, c) /= d;
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(col, c) /= d;
    for (std::size_t r = 0; r < h; ++r) {
      if (r == col) continue;
      const Complex f = lhs(r, col);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < h; ++c) lhs(r, c) -= f * lhs(col, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) -= f * rhs(col, c);
    }
  }
  return v.A + v.B * (phi * rhs);
}

/// Pairwise separated nodes pi(z) with |z_i| <= radius.
inline std::vector<symdisc::GdPoint> distinct_nodes(symdisc::Rng& rng, std::size_t n,
                                                    double radius = 0.8) {
  std::vector<symdisc::GdPoint> out;
  while (out.size() < n) {
    const symdisc::GdPoint w = random_G_point(rng, radius);
    bool ok = true;
    for (const auto& o : out)
      if (std::abs(o[0] - w[0]) + std::abs(o[1] - w[1]) < 1e-2) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

/// Solvable Pick data: values of a random Schur-class TFR at distinct nodes.
inline symdisc::PickProblem sampled_pick_problem(symdisc::Rng& rng, std::size_t m, std::size_t n,
                                                 std::size_t h, std::size_t count,
                                                 double radius = 0.8) {
  const symdisc::Colligation v = random_isometric_colligation(rng, m, n, h);
  symdisc::PickProblem pb;
  pb.nodes = distinct_nodes(rng, count, radius);
  for (const auto& w : pb.nodes) pb.targets.push_back(symdisc::eval_tfr(v, w[0], w[1]));
  return pb;
}

/// Completes orthonormal columns `fixed` to a rows x cols isometry with
/// random extra columns (Gram-Schmidt, two passes).
inline ComplexMatrix complete_isometry(symdisc::Rng& rng, const ComplexMatrix& fixed, std::size_t cols) {
  const std::size_t rows = fixed.rows(), k = fixed.cols();
  ComplexMatrix q = symdisc::hstack(fixed, gaussian(rng, rows, cols - k));
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t j = k; j < cols; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex dot{};
        for (std::size_t r = 0; r < rows; ++r) dot += std::conj(q(r, i)) * q(r, j);
        for (std::size_t r = 0; r < rows; ++r) q(r, j) -= dot * q(r, i);
      }
      double nrm = 0.0;
      for (std::size_t r = 0; r < rows; ++r) nrm += std::norm(q(r, j));
      nrm = std::sqrt(nrm);
      for (std::size_t r = 0; r < rows; ++r) q(r, j) /= nrm;
    }
  return q;
}

/// Isometric colligation whose first block column is [A; C] with
/// C = Q (I - A^H A)^(1/2) for a random isometry Q, so any contraction A is
/// admissible. Requires h >= n.
inline symdisc::Colligation isometric_with_A(symdisc::Rng& rng, const ComplexMatrix& a, std::size_t h) {
  const std::size_t m = a.rows(), n = a.cols();
  const ComplexMatrix defect = symdisc::linalg::psd_sqrt(ComplexMatrix::identity(n) - symdisc::adjoint_times(a, a));
  const ComplexMatrix c = random_isometry(rng, h, n) * defect;
  const ComplexMatrix v = complete_isometry(rng, symdisc::vstack(a, c), n + h);
  return symdisc::Colligation::from_block(v, random_unitary(rng, h), m, n);
}

inline ComplexMatrix random_positive(symdisc::Rng& rng, std::size_t n) {
  const ComplexMatrix u = random_unitary(rng, n);
  ComplexMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 0.2 + 0.7 * rng.uniform();
  return u * d * u.adjoint();
}

inline double product_residual(symdisc::Rng& rng, const symdisc::Colligation& v, const symdisc::Colligation& f1, const symdisc::Colligation& f2) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const symdisc::GdPoint w = random_G_point(rng, 0.95);
    const ComplexMatrix lhs = symdisc::eval_tfr(v, w[0], w[1]);
    const ComplexMatrix rhs = symdisc::eval_tfr(f1, w[0], w[1]) * symdisc::eval_tfr(f2, w[0], w[1]);
    worst = std::max(worst, symdisc::max_abs_diff(lhs, rhs));
  }
  return worst;
}

}  // namespace testsupport
