#include "symdisc/sympoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symdisc/error.hpp"
#include "symdisc/linalg.hpp"

namespace symdisc {
namespace {

void require_dim(const MultiPoly& a, const MultiPoly& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionError, "polynomial dimensions differ: " +
                                               std::to_string(a.dim()) + " vs " +
                                               std::to_string(b.dim()));
  }
}

Complex ipow(Complex z, int n) {
  Complex r = 1.0;
  Complex b = z;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t dim, Complex c) {
  MultiPoly f(dim);
  f.add_term(Exponent(dim, 0), c);
  return f;
}

MultiPoly MultiPoly::variable(std::size_t dim, std::size_t var, Complex c) {
  if (var >= dim) throw Error(ErrorCode::DimensionError, "variable index out of range");
  Exponent e(dim, 0);
  e[var] = 1;
  MultiPoly f(dim);
  f.add_term(e, c);
  return f;
}

MultiPoly MultiPoly::monomial(Exponent exp, Complex c) {
  MultiPoly f(exp.size());
  f.add_term(exp, c);
  return f;
}

void MultiPoly::add_term(const Exponent& exp, Complex c) {
  if (exp.size() != dim_) {
    throw Error(ErrorCode::DimensionError, "exponent length " + std::to_string(exp.size()) +
                                               " != dim " + std::to_string(dim_));
  }
  if (std::any_of(exp.begin(), exp.end(), [](int e) { return e < 0; })) {
    throw Error(ErrorCode::DegreeError, "negative exponent");
  }
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw Error(ErrorCode::DomainError, "coefficient is not finite");
  }
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (std::abs(c) > kPruneTol) terms_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (std::abs(it->second) <= kPruneTol) terms_.erase(it);
}

Complex MultiPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Complex{} : it->second;
}

Exponent MultiPoly::degree() const {
  Exponent d(dim_, 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < dim_; ++i) d[i] = std::max(d[i], e[i]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MultiPoly::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) <= kPruneTol; });
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_dim(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_dim(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(Complex s) {
  for (auto& [e, c] : terms_) c *= s;
  prune();
  return *this;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(Complex s, MultiPoly a) { return a *= s; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_dim(a, b);
  MultiPoly out(a.dim());
  Exponent e(a.dim());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly pow(const MultiPoly& f, int n) {
  if (n < 0) throw Error(ErrorCode::DegreeError, "negative power");
  MultiPoly r = MultiPoly::constant(f.dim(), 1.0);
  MultiPoly b = f;
  while (n > 0) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n > 0) b = b * b;
  }
  return r;
}

double max_coef_diff(const MultiPoly& a, const MultiPoly& b) {
  require_dim(a, b);
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, std::abs(c - b.coefficient(e)));
  for (const auto& [e, c] : b.terms())
    if (a.terms().find(e) == a.terms().end()) m = std::max(m, std::abs(c));
  return m;
}

Complex poly_eval(const MultiPoly& f, std::span<const Complex> z) {
  if (z.size() != f.dim()) {
    throw Error(ErrorCode::DimensionError, "point has " + std::to_string(z.size()) +
                                               " coordinates, polynomial has " +
                                               std::to_string(f.dim()));
  }
  Complex sum{};
  for (const auto& [e, c] : f.terms()) {
    Complex t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= ipow(z[i], e[i]);
    sum += t;
  }
  return sum;
}

MultiPoly reflect_polydisc(const MultiPoly& f, const Exponent& n) {
  if (n.size() != f.dim()) throw Error(ErrorCode::DimensionError, "degree vector length");
  MultiPoly out(f.dim());
  Exponent r(f.dim());
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > n[i]) {
        throw Error(ErrorCode::DegreeError, "exponent " + std::to_string(e[i]) +
                                                " exceeds degree " + std::to_string(n[i]) +
                                                " in variable " + std::to_string(i));
      }
      r[i] = n[i] - e[i];
    }
    out.add_term(r, std::conj(c));
  }
  return out;
}

MultiPoly reflect_G(const MultiPoly& xi, int k) {
  const std::size_t d = xi.dim();
  MultiPoly out(d);
  if (d == 0) return out;
  Exponent r(d);
  for (const auto& [e, c] : xi.terms()) {
    const int total = std::accumulate(e.begin(), e.end(), 0);
    if (total > k) {
      throw Error(ErrorCode::DegreeError, "k = " + std::to_string(k) +
                                              " below term total degree " + std::to_string(total));
    }
    for (std::size_t j = 0; j + 1 < d; ++j) r[j] = e[d - 2 - j];
    r[d - 1] = k - total;
    out.add_term(r, std::conj(c));
  }
  return out;
}

GdPoint sym_point(std::span<const Complex> z) {
  const std::size_t d = z.size();
  // e[j] = e_j of the prefix processed so far, e[0] = 1.
  std::vector<Complex> e(d + 1, Complex{});
  e[0] = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += z[i] * e[j - 1];
  return GdPoint(e.begin() + 1, e.end());
}

std::vector<Complex> gd_roots(const GdPoint& w) {
  const std::size_t d = w.size();
  // Monic coefficient of t^i is (-1)^(d-i) e_{d-i}.
  std::vector<Complex> lower(d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t j = d - i;
    lower[i] = (j % 2 == 0 ? 1.0 : -1.0) * w[j - 1];
  }
  return linalg::monic_roots(lower);
}

bool in_Gd(const GdPoint& w, double margin) {
  for (const auto& v : w)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  for (const auto& r : gd_roots(w))
    if (!(std::abs(r) < 1.0 - margin)) return false;
  return true;
}

bool in_Gd_closure(const GdPoint& w, double slack) {
  for (const auto& v : w)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  for (const auto& r : gd_roots(w))
    if (!(std::abs(r) <= 1.0 + slack)) return false;
  return true;
}

bool is_symmetric(const MultiPoly& f, double tol) {
  const std::size_t d = f.dim();
  for (std::size_t j = 0; j + 1 < d; ++j) {
    for (const auto& [e, c] : f.terms()) {
      Exponent s = e;
      std::swap(s[j], s[j + 1]);
      if (std::abs(c - f.coefficient(s)) > tol) return false;
    }
  }
  return true;
}

MultiPoly elementary_polynomial(std::size_t d, std::size_t j) {
  if (j == 0 || j > d) throw Error(ErrorCode::DimensionError, "elementary index out of range");
  MultiPoly out(d);
  // Enumerate j-subsets by bitmask; d is small.
  for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != j) continue;
    Exponent e(d, 0);
    for (std::size_t i = 0; i < d; ++i) e[i] = (mask >> i) & 1UL ? 1 : 0;
    out.add_term(e, 1.0);
  }
  return out;
}

MultiPoly symmetric_to_elementary(const MultiPoly& f, double tol) {
  const std::size_t d = f.dim();
  double scale = 1.0;
  for (const auto& [e, c] : f.terms()) scale = std::max(scale, std::abs(c));
  const double thr = tol * scale;
  if (!is_symmetric(f, thr)) throw Error(ErrorCode::NotSymmetric, "input is not symmetric");

  std::vector<MultiPoly> elem;
  for (std::size_t j = 1; j <= d; ++j) elem.push_back(elementary_polynomial(d, j));
  // powers[j][n] = e_{j+1}^n, grown on demand
  std::vector<std::vector<MultiPoly>> powers(d);
  auto epow = [&](std::size_t j, int n) -> const MultiPoly& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(MultiPoly::constant(d, 1.0));
    while (static_cast<int>(pw.size()) <= n) pw.push_back(pw.back() * elem[j]);
    return pw[static_cast<std::size_t>(n)];
  };

  MultiPoly g(d);
  MultiPoly rem = f;
  while (!rem.is_zero()) {
    const auto lead = std::prev(rem.terms().end());
    const Exponent alpha = lead->first;
    const Complex c = lead->second;
    bool partition = true;
    for (std::size_t i = 0; i + 1 < d; ++i)
      if (alpha[i] < alpha[i + 1]) partition = false;
    if (!partition) {
      if (std::abs(c) > thr) {
        throw Error(ErrorCode::NotSymmetric, "leading term is not a partition", std::abs(c));
      }
      // Rounding debris below tolerance.
      rem.add_term(alpha, -c);
      continue;
    }
    Exponent ge(d);
    MultiPoly term = MultiPoly::constant(d, c);
    for (std::size_t i = 0; i < d; ++i) {
      ge[i] = alpha[i] - (i + 1 < d ? alpha[i + 1] : 0);
      if (ge[i] > 0) term = term * epow(i, ge[i]);
    }
    g.add_term(ge, c);
    rem -= term;
    // Exact leading-term cancellation even under rounding.
    rem.add_term(alpha, -rem.coefficient(alpha));
  }
  return g;
}

}  // namespace symdisc
