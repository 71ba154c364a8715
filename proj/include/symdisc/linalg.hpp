#pragma once

#include <vector>

#include "symdisc/matrix.hpp"

namespace symdisc::linalg {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kMaxCondition = 1e12;

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< columns, phase-normalized
};

/// Eigendecomposition of the Hermitian part of `p`. Each eigenvector is
/// scaled so that its largest-modulus entry is real and positive, which
/// keeps downstream factors deterministic.
HermitianEigen hermitian_eigen(const ComplexMatrix& p);

/// max |P - P^H|
double hermitian_residual(const ComplexMatrix& p);

/// (P + P^H) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& p);

/// F with F^H F = P. Eigenvalues at or below tol * max(lambda_max, 1) are
/// treated as zero, so F has one row per retained eigenvalue (descending).
/// Throws NotHermitian, NotPSD.
ComplexMatrix gram_factor(const ComplexMatrix& p, double tol = kDefaultTol);

/// Hermitian PSD S with S * S = P; slightly negative eigenvalues are
/// clamped to zero. Throws NotPSD when min eigenvalue < -tol * max(1, |P|).
ComplexMatrix psd_sqrt(const ComplexMatrix& p, double tol = kDefaultTol);

/// Nearest PSD matrix in Frobenius norm (eigenvalue clamping).
ComplexMatrix psd_project(const ComplexMatrix& p);

/// Isometry V (b x a) with V x_i = y_i, where x_i / y_i are the columns of
/// X (a x k) and Y (b x k).
///
/// The span of X is orthonormalized by column-pivoted Gram-Schmidt at
/// `rank_tol` (relative to the largest column norm, floor 1). The image
/// basis is the orthogonal Procrustes fit to Y in those coordinates, and
/// both bases are completed with the standard basis vectors in pivot order.
/// An empty constraint set therefore yields eye(b, a).
///
/// Throws DimensionError if b < a or the column counts differ, and
/// GramMismatch if |<x_i,x_j> - <y_i,y_j>| > tol.
ComplexMatrix extend_isometry(const ComplexMatrix& x, const ComplexMatrix& y,
                              double tol = kDefaultTol, double rank_tol = -1.0);

/// Unitary W = [[T, (I - TT^H)^(1/2)], [(I - T^H T)^(1/2), -T^H]].
/// Throws NotContraction if the largest singular value exceeds 1 + tol.
ComplexMatrix unitary_dilation(const ComplexMatrix& t, double tol = kDefaultTol);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// Solves A X = B by partial-pivoted LU. Throws Singular when the
/// estimated condition number exceeds `max_condition`.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b,
                    double max_condition = kMaxCondition);

ComplexMatrix inverse(const ComplexMatrix& a, double max_condition = kMaxCondition);

/// Orthonormal basis (n x (n - r)) of the complement of the columns of q
/// (assumed orthonormal), built from standard basis vectors.
ComplexMatrix orthonormal_complement(const ComplexMatrix& q);

/// Roots of the monic polynomial t^n + c[n-1] t^(n-1) + ... + c[0].
std::vector<Complex> monic_roots(const std::vector<Complex>& lower_coeffs);

}  // namespace symdisc::linalg
