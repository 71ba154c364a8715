#pragma once

#include <map>
#include <span>
#include <vector>

#include "symdisc/matrix.hpp"

namespace symdisc {

using Exponent = std::vector<int>;

inline constexpr double kPruneTol = 1e-14;

/// Sparse polynomial in `dim` variables with complex coefficients.
/// Coefficients of modulus <= kPruneTol are dropped after every operation.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t dim) : dim_(dim) {}

  static MultiPoly constant(std::size_t dim, Complex c);
  /// c * z_var
  static MultiPoly variable(std::size_t dim, std::size_t var, Complex c = 1.0);
  static MultiPoly monomial(Exponent exp, Complex c);

  std::size_t dim() const noexcept { return dim_; }
  const std::map<Exponent, Complex>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Accumulates c into the coefficient of exp. Throws DimensionError on a
  /// length mismatch and DegreeError on a negative exponent.
  void add_term(const Exponent& exp, Complex c);
  Complex coefficient(const Exponent& exp) const;

  /// Coordinatewise max exponent.
  Exponent degree() const;
  int total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(Complex s);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void prune();

  std::size_t dim_ = 0;
  std::map<Exponent, Complex> terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(Complex s, MultiPoly a);
MultiPoly pow(const MultiPoly& f, int n);

/// Max coefficient difference over the union of supports.
double max_coef_diff(const MultiPoly& a, const MultiPoly& b);

Complex poly_eval(const MultiPoly& f, std::span<const Complex> z);

/// c z^a -> conj(c) z^(n - a). Throws DegreeError unless n >= degree(f).
MultiPoly reflect_polydisc(const MultiPoly& f, const Exponent& n);

/// Variables ordered (s_1, ..., s_{d-1}, p). The monomial
/// c s_1^a1 ... s_{d-1}^a_{d-1} p^a_d goes to
/// conj(c) s_1^a_{d-1} ... s_{d-1}^a1 p^(k - |a|).
/// Throws DegreeError if k < total degree.
MultiPoly reflect_G(const MultiPoly& xi, int k);

/// A point (s_1, ..., s_{d-1}, p) of C^d.
using GdPoint = std::vector<Complex>;

/// Elementary symmetric values (e_1, ..., e_d) of z.
GdPoint sym_point(std::span<const Complex> z);

/// Roots of t^d - s_1 t^(d-1) + ... + (-1)^d p.
std::vector<Complex> gd_roots(const GdPoint& w);

/// All roots strictly inside the disc of radius 1 - margin.
bool in_Gd(const GdPoint& w, double margin = 1e-12);
/// All roots within radius 1 + slack.
bool in_Gd_closure(const GdPoint& w, double slack = 1e-12);

/// Invariance under every adjacent transposition of variables.
bool is_symmetric(const MultiPoly& f, double tol = 1e-12);

/// g in (s_1, ..., s_{d-1}, p) with g o pi_d = f, by leading-term reduction
/// in lexicographic order. Throws NotSymmetric.
MultiPoly symmetric_to_elementary(const MultiPoly& f, double tol = 1e-10);

/// e_j(z_1, ..., z_d) as a polynomial, j in [1, d].
MultiPoly elementary_polynomial(std::size_t d, std::size_t j);

}  // namespace symdisc
