#include "symdisc/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symdisc/error.hpp"

namespace symdisc::linalg {
namespace {

using EMat = Eigen::MatrixXcd;

EMat to_eigen(const ComplexMatrix& m) {
  EMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

ComplexMatrix from_eigen(const EMat& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::DimensionError, std::string(what) + ": matrix must be square");
  }
}

double max_abs_eigen(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Clamped square root through the spectral decomposition, no checks.
ComplexMatrix sqrt_clamped(const HermitianEigen& eig) {
  const std::size_t n = eig.values.size();
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sqrt(std::max(eig.values[j], 0.0));
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= s;
  }
  return hermitian_part(scaled * eig.vectors.adjoint());
}

struct PivotedBasis {
  ComplexMatrix q;  // a x r orthonormal
  std::vector<std::size_t> pivots;
};

// Column-pivoted modified Gram-Schmidt with one re-orthogonalization pass.
PivotedBasis pivoted_basis(const ComplexMatrix& x, double threshold) {
  const std::size_t a = x.rows();
  const std::size_t k = x.cols();
  std::vector<ComplexMatrix> residual;
  residual.reserve(k);
  for (std::size_t j = 0; j < k; ++j) residual.push_back(x.col(j));

  auto norm = [](const ComplexMatrix& v) {
    double s = 0.0;
    for (const auto& z : v.data()) s += std::norm(z);
    return std::sqrt(s);
  };

  PivotedBasis out;
  std::vector<ComplexMatrix> basis;
  std::vector<bool> used(k, false);
  while (basis.size() < a) {
    std::size_t best = k;
    double best_norm = threshold;
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j]) continue;
      const double nj = norm(residual[j]);
      if (nj > best_norm) {
        best_norm = nj;
        best = j;
      }
    }
    if (best == k) break;
    used[best] = true;
    ComplexMatrix q = residual[best];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const Complex c = adjoint_times(b, q)(0, 0);
        for (std::size_t i = 0; i < a; ++i) q(i, 0) -= c * b(i, 0);
      }
    }
    const double nq = norm(q);
    if (nq <= threshold) continue;
    q *= 1.0 / nq;
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j]) continue;
      const Complex c = adjoint_times(q, residual[j])(0, 0);
      for (std::size_t i = 0; i < a; ++i) residual[j](i, 0) -= c * q(i, 0);
    }
    basis.push_back(std::move(q));
    out.pivots.push_back(best);
  }
  out.q = ComplexMatrix(a, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) out.q.set_block(0, j, basis[j]);
  return out;
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& p) {
  require_square(p, "hermitian_eigen");
  HermitianEigen out;
  const std::size_t n = p.rows();
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<EMat> solver(to_eigen(hermitian_part(p)));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::Singular, "Hermitian eigensolver did not converge");
  }
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.vectors = from_eigen(solver.eigenvectors());
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(out.vectors(i, j));
      if (m > best * (1.0 + 1e-12)) {
        best = m;
        arg = i;
      }
    }
    const Complex phase = std::conj(out.vectors(arg, j)) / std::abs(out.vectors(arg, j));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) *= phase;
  }
  return out;
}

double hermitian_residual(const ComplexMatrix& p) {
  require_square(p, "hermitian_residual");
  return max_abs_diff(p, p.adjoint());
}

ComplexMatrix hermitian_part(const ComplexMatrix& p) {
  require_square(p, "hermitian_part");
  ComplexMatrix out = p + p.adjoint();
  out *= 0.5;
  return out;
}

ComplexMatrix gram_factor(const ComplexMatrix& p, double tol) {
  require_square(p, "gram_factor");
  const double herm = hermitian_residual(p);
  if (herm > tol) throw Error(ErrorCode::NotHermitian, "gram_factor input", herm);
  const HermitianEigen eig = hermitian_eigen(p);
  const std::size_t n = eig.values.size();
  if (n == 0) return ComplexMatrix(0, 0);
  const double scale = std::max(max_abs_eigen(eig.values), 1.0);
  if (eig.values.front() < -tol * scale) {
    throw Error(ErrorCode::NotPSD, "gram_factor input has a negative eigenvalue",
                eig.values.front());
  }
  const double cutoff = tol * std::max(eig.values.back(), 1.0);
  std::vector<std::size_t> kept;
  for (std::size_t j = n; j-- > 0;)
    if (eig.values[j] > cutoff) kept.push_back(j);
  ComplexMatrix f(kept.size(), n);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    const std::size_t j = kept[r];
    const double s = std::sqrt(eig.values[j]);
    for (std::size_t i = 0; i < n; ++i) f(r, i) = s * std::conj(eig.vectors(i, j));
  }
  return f;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p, double tol) {
  require_square(p, "psd_sqrt");
  const HermitianEigen eig = hermitian_eigen(p);
  if (eig.values.empty()) return ComplexMatrix(0, 0);
  const double scale = std::max(max_abs_eigen(eig.values), 1.0);
  if (eig.values.front() < -tol * scale) {
    throw Error(ErrorCode::NotPSD, "psd_sqrt input has a negative eigenvalue",
                eig.values.front());
  }
  return sqrt_clamped(eig);
}

ComplexMatrix psd_project(const ComplexMatrix& p) {
  const HermitianEigen eig = hermitian_eigen(p);
  const std::size_t n = eig.values.size();
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::max(eig.values[j], 0.0);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= s;
  }
  return hermitian_part(scaled * eig.vectors.adjoint());
}

ComplexMatrix orthonormal_complement(const ComplexMatrix& q) {
  const std::size_t n = q.rows();
  const std::size_t r = q.cols();
  // Project the standard basis off span(q), then pivot on what remains.
  ComplexMatrix candidates = ComplexMatrix::identity(n) - q * q.adjoint();
  std::vector<ComplexMatrix> basis;
  std::vector<bool> used(n, false);
  auto norm = [](const ComplexMatrix& v) {
    double s = 0.0;
    for (const auto& z : v.data()) s += std::norm(z);
    return std::sqrt(s);
  };
  while (basis.size() < n - r) {
    std::size_t best = n;
    double best_norm = 1e-8;
    std::vector<ComplexMatrix> residuals(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      ComplexMatrix v = candidates.col(j);
      for (const auto& b : basis) {
        const Complex c = adjoint_times(b, v)(0, 0);
        for (std::size_t i = 0; i < n; ++i) v(i, 0) -= c * b(i, 0);
      }
      const double nv = norm(v);
      // Prefer the lowest index among near-equal candidates.
      if (nv > best_norm * (1.0 + 1e-9)) {
        best_norm = nv;
        best = j;
      }
      residuals[j] = std::move(v);
    }
    if (best == n) break;
    used[best] = true;
    ComplexMatrix v = residuals[best];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t c = 0; c < r; ++c) {
        Complex dot{};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, c)) * v(i, 0);
        for (std::size_t i = 0; i < n; ++i) v(i, 0) -= dot * q(i, c);
      }
      for (const auto& b : basis) {
        const Complex dot = adjoint_times(b, v)(0, 0);
        for (std::size_t i = 0; i < n; ++i) v(i, 0) -= dot * b(i, 0);
      }
    }
    v *= 1.0 / norm(v);
    basis.push_back(std::move(v));
  }
  ComplexMatrix out(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) out.set_block(0, j, basis[j]);
  return out;
}

ComplexMatrix extend_isometry(const ComplexMatrix& x, const ComplexMatrix& y, double tol,
                              double rank_tol) {
  if (rank_tol < 0.0) rank_tol = tol;
  const std::size_t a = x.rows();
  const std::size_t b = y.rows();
  if (b < a) {
    throw Error(ErrorCode::DimensionError, "extend_isometry: target dimension " +
                                               std::to_string(b) + " < source dimension " +
                                               std::to_string(a));
  }
  if (x.cols() != y.cols()) {
    throw Error(ErrorCode::DimensionError, "extend_isometry: constraint counts differ");
  }
  const std::size_t k = x.cols();
  if (k > 0) {
    const double mismatch = max_abs_diff(adjoint_times(x, x), adjoint_times(y, y));
    if (mismatch > tol) {
      throw Error(ErrorCode::GramMismatch, "constraint Gram matrices differ", mismatch);
    }
  }

  double max_norm = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a; ++i) s += std::norm(x(i, j));
    max_norm = std::max(max_norm, std::sqrt(s));
  }
  const PivotedBasis src = pivoted_basis(x, rank_tol * max_norm);
  const std::size_t r = src.q.cols();

  ComplexMatrix dst(b, r);
  if (r > 0) {
    // Procrustes: the orthonormal Q_Y minimizing |Q_Y C - Y| with C = Q_X^H X
    // is the polar factor of Y C^H.
    const ComplexMatrix coeffs = adjoint_times(src.q, x);
    const ComplexMatrix target = y * coeffs.adjoint();
    Eigen::JacobiSVD<EMat> svd(to_eigen(target), Eigen::ComputeThinU | Eigen::ComputeThinV);
    dst = from_eigen(svd.matrixU() * svd.matrixV().adjoint());
  }

  ComplexMatrix v = dst * src.q.adjoint();
  if (r < a) {
    const ComplexMatrix src_perp = orthonormal_complement(src.q);
    const ComplexMatrix dst_perp = orthonormal_complement(dst).block(0, 0, b, a - r);
    v += dst_perp * src_perp.adjoint();
  }
  return v;
}

ComplexMatrix unitary_dilation(const ComplexMatrix& t, double tol) {
  const double norm = operator_norm(t);
  if (norm > 1.0 + tol) throw Error(ErrorCode::NotContraction, "unitary_dilation", norm);
  const std::size_t m = t.rows();
  const std::size_t n = t.cols();
  const ComplexMatrix th = t.adjoint();
  // Both defect roots come from one SVD so that T D = D_* T holds to
  // roundoff even when singular values approach 1.
  ComplexMatrix defect_star = ComplexMatrix::identity(m), defect = ComplexMatrix::identity(n);
  if (m > 0 && n > 0) {
    Eigen::JacobiSVD<EMat> svd(to_eigen(t), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const EMat& u = svd.matrixU();
    const EMat& v = svd.matrixV();
    Eigen::VectorXd du = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m));
    Eigen::VectorXd dv = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      const double sv = std::min(svd.singularValues()(i), 1.0);
      du(i) = dv(i) = std::sqrt((1.0 - sv) * (1.0 + sv));
    }
    defect_star = from_eigen(u * du.asDiagonal() * u.adjoint());
    defect = from_eigen(v * dv.asDiagonal() * v.adjoint());
  }
  ComplexMatrix w(m + n, n + m);
  w.set_block(0, 0, t);
  w.set_block(0, n, defect_star);
  w.set_block(m, 0, defect);
  w.set_block(m, n, -th);
  return w;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  Eigen::JacobiSVD<EMat> svd(to_eigen(m));
  return svd.singularValues()(0);
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b, double max_condition) {
  require_square(a, "solve");
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionError, "solve: rhs rows differ");
  if (a.rows() == 0) return ComplexMatrix(0, b.cols());
  const EMat ea = to_eigen(a);
  Eigen::PartialPivLU<EMat> lu(ea);
  const double rcond = lu.rcond();
  if (!(rcond * max_condition >= 1.0)) {
    throw Error(ErrorCode::Singular, "linear system is numerically singular",
                rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity());
  }
  return from_eigen(lu.solve(to_eigen(b)));
}

ComplexMatrix inverse(const ComplexMatrix& a, double max_condition) {
  return solve(a, ComplexMatrix::identity(a.rows()), max_condition);
}

std::vector<Complex> monic_roots(const std::vector<Complex>& lower_coeffs) {
  const std::size_t n = lower_coeffs.size();
  if (n == 0) return {};
  if (n == 1) return {-lower_coeffs[0]};
  if (n == 2) {
    // t^2 + c1 t + c0, written to avoid cancellation.
    const Complex c1 = lower_coeffs[1];
    const Complex c0 = lower_coeffs[0];
    Complex disc = std::sqrt(c1 * c1 - 4.0 * c0);
    if (std::real(std::conj(c1) * disc) < 0.0) disc = -disc;
    const Complex q = -0.5 * (c1 + disc);
    if (q == Complex{}) return {Complex{}, Complex{}};
    return {q, c0 / q};
  }
  EMat companion = EMat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -lower_coeffs[i];
  Eigen::ComplexEigenSolver<EMat> solver(companion, false);
  std::vector<Complex> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  return roots;
}

}  // namespace symdisc::linalg
