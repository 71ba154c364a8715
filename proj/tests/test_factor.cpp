#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "symdisc/error.hpp"
#include "symdisc/factor.hpp"

using namespace symdisc;
using testsupport::gaussian;
using testsupport::isometric_with_A;
using testsupport::product_residual;
using testsupport::random_positive;

namespace {

Colligation swap_colligation() {
  return Colligation::from_block(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}, ComplexMatrix::identity(1), 1, 1);
}

double residual_named(const FactorReport& r, const std::string& name) {
  for (const auto& c : r.residuals)
    if (c.name == name) return c.residual;
  FAIL("no residual named " << name);
  return 0.0;
}

}  // namespace

TEST_CASE("composing phi with itself gives the permutation colligation") {
  const StructuredColligation v = compose_colligations(swap_colligation(), swap_colligation());
  const ComplexMatrix perm{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}};
  CHECK(v.V.block() == perm);
  CHECK(v.V.tau == ComplexMatrix::identity(2));
  CHECK(v.h1 == 1);
  CHECK(v.h2 == 1);
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const GdPoint w = testsupport::random_G_point(rng, 0.95);
    const Complex f = testsupport::phi_scalar(1.0, w[0], w[1]);
    CHECK(std::abs(eval_tfr(v.V, w[0], w[1])(0, 0) - f * f) <= 1e-10);
  }
}

TEST_CASE("composing with a constant unimodular factor") {
  const Complex c = std::polar(1.0, 0.4);
  const Colligation k = Colligation::from_block(ComplexMatrix{{c}}, ComplexMatrix(0, 0), 1, 1);
  const StructuredColligation v = compose_colligations(swap_colligation(), k);
  CHECK(v.h2 == 0);
  Rng rng(72);
  for (int i = 0; i < 20; ++i) {
    const GdPoint w = testsupport::random_G_point(rng, 0.95);
    CHECK(std::abs(eval_tfr(v.V, w[0], w[1])(0, 0) - c * testsupport::phi_scalar(1.0, w[0], w[1])) <= 1e-12);
  }
}

TEST_CASE("compose errors") {
  Rng rng(73);
  const Colligation a = testsupport::random_isometric_colligation(rng, 2, 2, 1);
  const Colligation b = testsupport::random_isometric_colligation(rng, 3, 1, 1);
  CHECK_THROWS_AS(compose_colligations(a, b), Error);
  try {
    compose_colligations(a, b);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
  const Colligation half =
      Colligation::from_block(0.5 * ComplexMatrix::identity(2), ComplexMatrix::identity(1), 1, 1);
  try {
    compose_colligations(half, swap_colligation());
    FAIL("expected NotIsometric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIsometric);
  }
}

TEST_CASE("zero-zero conditions on the permutation colligation") {
  const StructuredColligation v = compose_colligations(swap_colligation(), swap_colligation());
  const ComplexMatrix one{{1.0}};
  const FactorReport r = check_factor_conditions(v, FactorVariant::ZeroZero, {{}, {}, {}, one, one});
  CHECK(residual_named(r, "D2 = X Y") == 0.0);
  CHECK(residual_named(r, "X^H D1 = 0") == 0.0);
  CHECK(r.max() == 0.0);

  const auto [f1, f2] = split_zero_zero(v, one, one);
  Rng rng(74);
  CHECK(product_residual(rng, v.V, f1, f2) <= 1e-12);
  for (const auto* f : {&f1, &f2}) {
    const GdPoint w = testsupport::random_G_point(rng, 0.9);
    CHECK(std::abs(eval_tfr(*f, w[0], w[1])(0, 0) - testsupport::phi_scalar(1.0, w[0], w[1])) <= 1e-12);
  }
}

TEST_CASE("perturbed D2 is caught") {
  StructuredColligation v = compose_colligations(swap_colligation(), swap_colligation());
  v.V.D(0, 1) += 0.1;
  const ComplexMatrix one{{1.0}};
  const FactorReport r = check_factor_conditions(v, FactorVariant::ZeroZero, {{}, {}, {}, one, one});
  CHECK(residual_named(r, "D2 = X Y") >= 0.1 - 1e-10);
  try {
    split_zero_zero(v, one, one);
    FAIL("expected ConditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConditionViolated);
    CHECK(std::abs(e.residual() - 0.1) <= 1e-15);
  }
}

TEST_CASE("invertible split of a scalar unitary") {
  const double a = 0.6, c = std::sqrt(1.0 - a * a);
  StructuredColligation v;
  v.V = Colligation::from_block(ComplexMatrix{{a, c}, {c, -a}}, ComplexMatrix::identity(1), 1, 1);
  v.h1 = 1;
  v.h2 = 0;
  const auto [f1, f2] = split_invertible(v);
  CHECK(std::abs(f2.A(0, 0) - 1.0) <= 1e-12);
  CHECK(f2.h() == 0);
  CHECK(std::abs(f1.A(0, 0) - a) <= 1e-12);
  Rng rng(75);
  CHECK(product_residual(rng, v.V, f1, f2) <= 1e-12);

  // With h2 = 0 the canonical A1, A2 always fit, so perturb D2 of a
  // composition that has both state spaces.
  const Colligation g1 = isometric_with_A(rng, ComplexMatrix{{0.5}}, 1);
  const Colligation g2 = isometric_with_A(rng, ComplexMatrix{{0.5}}, 1);
  StructuredColligation bad = compose_colligations(g1, g2);
  CHECK(check_factor_conditions(bad, FactorVariant::Invertible).max() <= 1e-12);
  bad.V.D(0, 1) += 0.1;
  try {
    split_invertible(bad);
    FAIL("expected ConditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConditionViolated);
  }
}

TEST_CASE("zero-selfadjoint split needs an invertible C1") {
  StructuredColligation v;
  v.V = Colligation::from_block(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, ComplexMatrix::identity(1), 1, 1);
  v.h1 = 1;
  try {
    split_zero_selfadjoint(v);
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
}

TEST_CASE("zero-selfadjoint round trip with the scalar A = 0.6") {
  const Colligation v2 =
      Colligation::from_block(linalg::unitary_dilation(ComplexMatrix{{0.6}}), ComplexMatrix::identity(1), 1, 1);
  const StructuredColligation v = compose_colligations(swap_colligation(), v2);
  const FactorReport r = check_factor_conditions(v, FactorVariant::ZeroSelfadjoint);
  CHECK(residual_named(r, "C1^H C1 = A^2") <= 1e-10);
  CHECK(r.max() <= 1e-9);
  const auto [f1, f2] = split_zero_selfadjoint(v);
  CHECK(std::abs(f2.A(0, 0) - 0.6) <= 1e-12);
  Rng rng(76);
  CHECK(product_residual(rng, v.V, f1, f2) <= 1e-9);
}

TEST_CASE("random round trips for every variant") {
  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    CAPTURE(t);
    const std::size_t n = 1 + t % 2, h1 = n + t % 2, h2 = n + (t / 2) % 2;

    // invertible: generic isometric factors with square A blocks.
    {
      const Colligation v1 = isometric_with_A(rng, testsupport::random_contraction(rng, n, n, 0.8), h1);
      const Colligation v2 = isometric_with_A(rng, testsupport::random_contraction(rng, n, n, 0.8), h2);
      const StructuredColligation v = compose_colligations(v1, v2);
      CHECK(check_colligation(v.V).isometry_residual <= 1e-10);
      CHECK(check_factor_conditions(v, FactorVariant::Invertible, {v1.A, v2.A, {}, {}, {}}).max() <= 1e-9);
      const auto [f1, f2] = split_invertible(v);
      CHECK(check_colligation(f1).isometry_residual <= 1e-8);
      CHECK(check_colligation(f2).isometry_residual <= 1e-8);
      CHECK(f1.tau == v.tau1());
      CHECK(f2.tau == v.tau2());
      CHECK(product_residual(rng, v.V, f1, f2) <= 1e-8);
    }

    // zero-selfadjoint: psi1(0,0) = 0 and psi2(0,0) positive definite.
    {
      const Colligation v1 = isometric_with_A(rng, ComplexMatrix(n, n), h1);
      const Colligation v2 = isometric_with_A(rng, random_positive(rng, n), h2);
      const StructuredColligation v = compose_colligations(v1, v2);
      CHECK(check_factor_conditions(v, FactorVariant::ZeroSelfadjoint).max() <= 1e-9);
      const auto [f1, f2] = split_zero_selfadjoint(v);
      CHECK(check_colligation(f1).isometry_residual <= 1e-8);
      CHECK(check_colligation(f2).isometry_residual <= 1e-8);
      CHECK(max_abs(f1.A) == 0.0);
      CHECK(max_abs_diff(f2.A, f2.A.adjoint()) <= 1e-12);
      CHECK(product_residual(rng, v.V, f1, f2) <= 1e-8);
    }

    // zero-zero: both factors vanish at the origin; X = C of the first
    // factor and Y = B of the second.
    {
      const Colligation v1 = isometric_with_A(rng, ComplexMatrix(n, n), h1);
      const Colligation v2 = isometric_with_A(rng, ComplexMatrix(n, n), h2);
      const StructuredColligation v = compose_colligations(v1, v2);
      const FactorAux aux{{}, {}, {}, v1.C, v2.B};
      CHECK(check_factor_conditions(v, FactorVariant::ZeroZero, aux).max() <= 1e-9);
      const auto [f1, f2] = split_zero_zero(v, v1.C, v2.B);
      CHECK(check_colligation(f1).isometry_residual <= 1e-8);
      CHECK(check_colligation(f2).isometry_residual <= 1e-8);
      CHECK(product_residual(rng, v.V, f1, f2) <= 1e-8);

      const ComplexMatrix wrong_y = v2.B + 0.05 * gaussian(rng, v2.B.rows(), v2.B.cols());
      try {
        split_zero_zero(v, v1.C, wrong_y);
        FAIL("expected ConditionViolated");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConditionViolated);
        CHECK(std::abs(e.residual() - max_abs_diff(v.D2(), v1.C * wrong_y)) <= 1e-15);
      }
    }
  }
}

TEST_CASE("structured validation") {
  StructuredColligation v = compose_colligations(swap_colligation(), swap_colligation());
  v.V.D(1, 0) = 1e-20;
  try {
    v.validate();
    FAIL("expected ConditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConditionViolated);
  }
  v = compose_colligations(swap_colligation(), swap_colligation());
  v.h2 = 2;
  try {
    v.validate();
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
  CHECK(parse_variant("zero-zero") == FactorVariant::ZeroZero);
  CHECK(to_string(FactorVariant::ZeroSelfadjoint) == "zero-selfadjoint");
}
