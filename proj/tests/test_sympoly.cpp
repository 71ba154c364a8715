#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symdisc/error.hpp"
#include "symdisc/rng.hpp"
#include "symdisc/sympoly.hpp"

using namespace symdisc;

namespace {

MultiPoly z(std::size_t d, std::size_t j) { return MultiPoly::variable(d, j); }
MultiPoly c(std::size_t d, Complex v) { return MultiPoly::constant(d, v); }

MultiPoly random_poly(Rng& rng, std::size_t d, int max_exp, std::size_t terms) {
  MultiPoly f(d);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(d);
    for (auto& x : e) x = static_cast<int>(rng.next_u64() % (max_exp + 1));
    f.add_term(e, rng.complex_normal());
  }
  return f;
}

std::vector<Complex> random_point(Rng& rng, std::size_t d, double radius = 1.0) {
  std::vector<Complex> p(d);
  for (auto& x : p) x = radius * rng.unit_disc();
  return p;
}

// Sum of f over all permutations of its variables.
MultiPoly symmetrize(const MultiPoly& f) {
  const std::size_t d = f.dim();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly out(d);
  do {
    for (const auto& [e, coef] : f.terms()) {
      Exponent pe(d);
      for (std::size_t j = 0; j < d; ++j) pe[perm[j]] = e[j];
      out.add_term(pe, coef);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::SchemaError;
}

}  // namespace

TEST_CASE("poly_eval examples") {
  const std::vector<Complex> origin{0.0, 0.0};
  CHECK(poly_eval(c(2, 2.0) - z(2, 0), origin) == Complex(2.0));
  const std::vector<Complex> ii{Complex(0, 1), Complex(0, 1)};
  CHECK(std::abs(poly_eval(z(2, 0) * z(2, 1), ii) - Complex(-1.0)) <= 1e-15);
  const std::vector<Complex> pt{1.0, 2.0};
  CHECK(std::abs(poly_eval(pow(z(2, 0), 2) + pow(z(2, 1), 2), pt) - Complex(5.0)) <= 1e-15);
  const std::vector<Complex> bad{1.0};
  CHECK(code_of([&] { poly_eval(z(2, 0), bad); }) == ErrorCode::DimensionError);
}

TEST_CASE("pruning keeps the representation canonical") {
  MultiPoly f = z(2, 0) + c(2, 1.0);
  f -= z(2, 0);
  CHECK(f == c(2, 1.0));
  f.add_term({0, 0}, Complex(-1.0 + 1e-15));
  CHECK(f.is_zero());
  CHECK(code_of([&] { f.add_term({1}, 1.0); }) == ErrorCode::DimensionError);
  CHECK(code_of([&] { f.add_term({-1, 0}, 1.0); }) == ErrorCode::DegreeError);
}

TEST_CASE("reflect_polydisc examples") {
  const Complex a(0.3, -0.4);
  const MultiPoly blaschke = c(1, 1.0) - std::conj(a) * z(1, 0);
  CHECK(max_coef_diff(reflect_polydisc(blaschke, {1}), z(1, 0) - c(1, a)) <= 1e-15);
  CHECK(reflect_polydisc(c(2, 2.0) - z(2, 0), {1, 0}) == 2.0 * z(2, 0) - c(2, 1.0));
  CHECK(reflect_polydisc(c(3, Complex(1, 2)), {0, 0, 0}) == c(3, Complex(1, -2)));
  CHECK(code_of([] { reflect_polydisc(pow(z(2, 0), 2), {1, 0}); }) == ErrorCode::DegreeError);
}

TEST_CASE("reflect_G examples") {
  const MultiPoly xi = c(2, 2.0) - z(2, 0);
  CHECK(reflect_G(xi, 1) == 2.0 * z(2, 1) - z(2, 0));
  CHECK(reflect_G(c(2, 1.0), 3) == pow(z(2, 1), 3));
  CHECK(reflect_G(reflect_G(xi, 1), 1) == xi);
  CHECK(code_of([&] { reflect_G(z(2, 0) * z(2, 1), 1); }) == ErrorCode::DegreeError);
  // d = 3 swaps s1 and s2: s1 -> s2 p^0 with k = 1.
  CHECK(reflect_G(z(3, 0), 1) == z(3, 1));
}

TEST_CASE("reflections are involutions on random sparse polynomials") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 3;
    const MultiPoly f = random_poly(rng, d, 3, 1 + rng.next_u64() % 6);
    Exponent n = f.degree();
    for (auto& x : n) x += static_cast<int>(rng.next_u64() % 2);
    CHECK(max_coef_diff(reflect_polydisc(reflect_polydisc(f, n), n), f) <= 1e-14);
    const int k = f.total_degree() + static_cast<int>(rng.next_u64() % 2);
    CHECK(max_coef_diff(reflect_G(reflect_G(f, k), k), f) <= 1e-14);
  }
}

TEST_CASE("reflections are multiplicative") {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + t % 3;
    const MultiPoly f = random_poly(rng, d, 2, 3), g = random_poly(rng, d, 2, 3);
    Exponent n = f.degree(), m = g.degree(), nm(d);
    for (std::size_t j = 0; j < d; ++j) nm[j] = n[j] + m[j];
    CHECK(max_coef_diff(reflect_polydisc(f * g, nm), reflect_polydisc(f, n) * reflect_polydisc(g, m)) <=
          1e-12);
    const int k1 = f.total_degree(), k2 = g.total_degree() + 1;
    CHECK(max_coef_diff(reflect_G(f * g, k1 + k2), reflect_G(f, k1) * reflect_G(g, k2)) <= 1e-12);
  }
}

TEST_CASE("reflect_G satisfies its evaluation identity") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + t % 3;
    const MultiPoly xi = random_poly(rng, d, 2, 4);
    const int k = xi.total_degree() + static_cast<int>(rng.next_u64() % 2);
    std::vector<Complex> w = random_point(rng, d, 1.5);
    if (std::abs(w[d - 1]) < 0.1) w[d - 1] = 0.5;
    const Complex pb = std::conj(w[d - 1]);
    std::vector<Complex> arg(d);
    for (std::size_t j = 0; j + 1 < d; ++j) arg[j] = std::conj(w[d - 2 - j]) / pb;
    arg[d - 1] = 1.0 / pb;
    const Complex expect = std::pow(w[d - 1], k) * std::conj(poly_eval(xi, arg));
    const Complex got = poly_eval(reflect_G(xi, k), w);
    CHECK(std::abs(got - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("sym_point examples and permutation invariance") {
  const std::vector<Complex> half{0.5, 0.5};
  CHECK(sym_point(half) == GdPoint{1.0, 0.25});
  const Complex a(0.2, 0.7);
  const std::vector<Complex> pm{a, -a};
  const GdPoint w = sym_point(pm);
  CHECK(w[0] == Complex(0.0));
  CHECK(std::abs(w[1] + a * a) <= 1e-16);
  const std::vector<Complex> ones{1.0, 1.0, 1.0};
  CHECK(sym_point(ones) == GdPoint{3.0, 3.0, 1.0});

  Rng rng(24);
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> p = random_point(rng, 4);
    const GdPoint base = sym_point(p);
    std::sort(p.begin(), p.end(), [](Complex x, Complex y) { return x.real() < y.real(); });
    do {
      const GdPoint q = sym_point(p);
      for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(q[j] - base[j]) <= 1e-15);
    } while (std::next_permutation(p.begin(), p.end(),
                                   [](Complex x, Complex y) { return x.real() < y.real(); }));
  }
}

TEST_CASE("membership in G_d by root location") {
  CHECK(in_Gd({0.0, 0.0}));
  CHECK(in_Gd({1.0, 0.25}));
  CHECK_FALSE(in_Gd({2.0, 1.0}));
  CHECK(in_Gd_closure({2.0, 1.0}));
  CHECK_FALSE(in_Gd_closure({3.0, 2.0}));
  CHECK(in_Gd({0.9, 0.2, 0.01}));
  const auto r = gd_roots({1.0, 0.25});
  REQUIRE(r.size() == 2);
  for (auto x : r) CHECK(std::abs(x - 0.5) <= 1e-7);
}

TEST_CASE("is_symmetric examples") {
  CHECK(is_symmetric(z(2, 0) + z(2, 1)));
  CHECK_FALSE(is_symmetric(z(2, 0) - z(2, 1)));
  CHECK(is_symmetric(pow(z(2, 0), 2) * z(2, 1) + z(2, 0) * pow(z(2, 1), 2)));
}

TEST_CASE("symmetric_to_elementary examples") {
  const MultiPoly s = z(2, 0), p = z(2, 1);
  CHECK(symmetric_to_elementary(z(2, 0) + z(2, 1)) == s);
  CHECK(max_coef_diff(symmetric_to_elementary(pow(z(2, 0), 2) + pow(z(2, 1), 2)), s * s - 2.0 * p) <=
        1e-14);
  CHECK(symmetric_to_elementary(pow(z(2, 0) * z(2, 1), 2)) == p * p);
  CHECK(code_of([] { symmetric_to_elementary(z(2, 0)); }) == ErrorCode::NotSymmetric);
}

TEST_CASE("elementary polynomials match sym_point") {
  Rng rng(25);
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto pt = random_point(rng, d);
    const GdPoint w = sym_point(pt);
    for (std::size_t j = 1; j <= d; ++j)
      CHECK(std::abs(poly_eval(elementary_polynomial(d, j), pt) - w[j - 1]) <= 1e-14);
  }
}

TEST_CASE("symmetric rewrite preserves values under pi_d") {
  Rng rng(26);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 2 + t % 2;
    const MultiPoly f = symmetrize(random_poly(rng, d, 3, 3));
    REQUIRE(is_symmetric(f));
    const MultiPoly g = symmetric_to_elementary(f);
    for (int i = 0; i < 100; ++i) {
      const auto pt = random_point(rng, d);
      const Complex a = poly_eval(f, pt), b = poly_eval(g, sym_point(pt));
      CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
    }
  }
}
