#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "symdisc/error.hpp"
#include "symdisc/pick.hpp"

using namespace symdisc;

namespace {

ComplexMatrix m1(Complex z) { return ComplexMatrix{{z}}; }

PickProblem one_node(GdPoint w, ComplexMatrix a) {
  PickProblem pb;
  pb.nodes.push_back(std::move(w));
  pb.targets.push_back(std::move(a));
  return pb;
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

TEST_CASE("lift_node examples") {
  const LiftedNode a = lift_node(1.0, 0.25);
  CHECK(a.diagonal);
  CHECK(a.z1 == a.z2);
  CHECK(std::abs(a.z1 - 0.5) <= 1e-12);

  const LiftedNode b = lift_node(0.0, 0.0);
  CHECK(b.diagonal);
  CHECK(b.z1 == Complex(0.0));

  const LiftedNode c = lift_node(0.0, -0.25);
  CHECK_FALSE(c.diagonal);
  CHECK(std::abs(c.z1 + 0.5) <= 1e-15);
  CHECK(std::abs(c.z2 - 0.5) <= 1e-15);

  CHECK(code_of([] { lift_node(3.0, 2.0); }) == ErrorCode::DomainError);
}

TEST_CASE("problem validation") {
  CHECK(code_of([] { one_node({3.0, 2.0}, m1(0.0)).validate(); }) == ErrorCode::DomainError);
  CHECK(code_of([] { one_node({0.0, 0.0}, m1(1.5)).validate(); }) == ErrorCode::NotContraction);
  PickProblem dup = one_node({0.1, 0.0}, m1(0.0));
  dup.nodes.push_back({0.1, 0.0});
  dup.targets.push_back(m1(0.1));
  CHECK(code_of([&] { dup.validate(); }) == ErrorCode::DomainError);
  PickProblem shapes = one_node({0.1, 0.0}, m1(0.0));
  shapes.nodes.push_back({0.2, 0.0});
  shapes.targets.push_back(ComplexMatrix(1, 2));
  CHECK(code_of([&] { shapes.validate(); }) == ErrorCode::ShapeMismatch);
  PickProblem missing = one_node({0.1, 0.0}, m1(0.0));
  missing.targets.clear();
  CHECK(code_of([&] { missing.validate(); }) == ErrorCode::DimensionError);
}

TEST_CASE("one node at the origin with target zero") {
  const PickProblem pb = one_node({0.0, 0.0}, m1(0.0));
  const AglerCert cert = solve_agler_feasibility(pb);
  REQUIRE(cert.points.size() == 1);
  CHECK(std::abs(cert.gamma1(0, 0) - 0.5) <= 1e-12);
  CHECK(std::abs(cert.gamma2(0, 0) - 0.5) <= 1e-12);
  CHECK(cert.residual <= 1e-12);
  REQUIRE(cert.F1.rows() == 1);
  REQUIRE(cert.F2.rows() == 1);
  CHECK(std::abs(std::abs(cert.F1(0, 0)) - std::sqrt(0.5)) <= 1e-12);
  CHECK(std::abs(std::abs(cert.F2(0, 0)) - std::sqrt(0.5)) <= 1e-12);

  const DoublySymmetricTau t = build_doubly_symmetric_tau(cert);
  CHECK(max_abs_diff(t.tau, ComplexMatrix::identity(2)) <= 1e-15);
  REQUIRE(t.F.size() == 1);
  // G = F^H (I - phi^H phi) F with phi(tau, 0, 0) = 0 gives 1.
  CHECK(std::abs(adjoint_times(t.F[0], t.F[0])(0, 0) - 1.0) <= 1e-12);

  const Colligation v = lurking_isometry(pb, t.tau, t.F);
  CHECK(check_colligation(v).isometry_residual <= 1e-8);
  CHECK(std::abs(v.A(0, 0)) <= 1e-12);
  CHECK(max_abs_diff(v.C, t.F[0]) <= 1e-12);

  const Colligation s = solve_pick(pb);
  CHECK(std::abs(eval_tfr(s, 0.0, 0.0)(0, 0)) <= 1e-12);
  CHECK(boundary_inner_residual(s, false, 1000, 1) <= 1e-8);
}

TEST_CASE("one node with an isometric target needs no state") {
  const PickProblem pb = one_node({0.0, 0.0}, ComplexMatrix{{1.0}, {0.0}});
  const AglerCert cert = solve_agler_feasibility(pb);
  CHECK(cert.F1.rows() == 0);
  CHECK(cert.F2.rows() == 0);
  const PickSolution sol = solve_pick_detailed(pb);
  CHECK(sol.interpolation_residual <= 1e-15);
  CHECK(sol.colligation.h() == 0);
  CHECK(check_colligation(sol.colligation).isometry_residual <= 1e-15);
  CHECK(boundary_inner_residual(sol.colligation, false, 200, 1) <= 1e-15);
}

TEST_CASE("two scalar nodes") {
  PickProblem pb = one_node({0.0, 0.0}, m1(0.0));
  pb.nodes.push_back({0.8, 0.15});
  pb.targets.push_back(m1(0.1));
  const PickSolution sol = solve_pick_detailed(pb);
  CHECK(sol.interpolation_residual <= 1e-6);
  CHECK(interpolation_residual(pb, sol.colligation) <= 1e-6);
  CHECK(check_colligation(sol.colligation).isometry_residual <= 1e-8);
  CHECK(boundary_inner_residual(sol.colligation, false, 200, 2) <= 1e-7);
}

TEST_CASE("nearby nodes with a jump to a unimodular value are infeasible") {
  for (double eps : {1e-3, 1e-4}) {
    PickProblem pb = one_node({0.0, 0.0}, m1(0.0));
    pb.nodes.push_back({eps, 0.0});
    pb.targets.push_back(m1(1.0));
    try {
      solve_pick(pb);
      FAIL("expected Infeasible");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Infeasible);
      CHECK(e.residual() >= 0.1);
    }
  }
}

TEST_CASE("adjoint_problem conjugates nodes and adjoints targets") {
  PickProblem pb = one_node({Complex(0.1, 0.2), Complex(0.0, -0.1)}, ComplexMatrix{{Complex(0.1, 0.3), 0.2}});
  const PickProblem a = adjoint_problem(pb);
  CHECK(a.nodes[0][0] == Complex(0.1, -0.2));
  CHECK(a.nodes[0][1] == Complex(0.0, 0.1));
  CHECK(a.targets[0] == pb.targets[0].adjoint());
}

TEST_CASE("random solvable problems satisfy every post-condition") {
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 1 + t % 2, n = 1 + (t / 2) % 2, h = 1 + t % 3, count = 1 + t % 4;
    const PickProblem pb = testsupport::sampled_pick_problem(rng, m, n, h, count);
    CAPTURE(t);
    const PickSolution sol = solve_pick_detailed(pb);
    CHECK(sol.coisometric == (n > m));
    const PickProblem& solved = sol.coisometric ? adjoint_problem(pb) : pb;

    CHECK(sol.cert.residual <= 1e-8);
    CHECK(agler_residual(solved, sol.cert.points, sol.cert.gamma1, sol.cert.gamma2) <= 1e-8);
    CHECK(double_symmetry_residual(sol.cert) <= 1e-8);
    CHECK(condition_solv_residual(solved, sol.tau.tau, sol.tau.F) <= 1e-7);

    const ColligationReport r = check_colligation(sol.colligation);
    CHECK((sol.coisometric ? r.coisometry_residual : r.isometry_residual) <= 1e-8);
    CHECK(interpolation_residual(pb, sol.colligation) <= 1e-6);
    CHECK(boundary_inner_residual(sol.colligation, sol.coisometric, 200, t) <= 1e-7);

    // Both lifts of every off-diagonal node carry the same target.
    std::size_t off_diagonal = 0;
    for (std::size_t i = 0; i < solved.size(); ++i)
      if (!lift_node(solved.nodes[i][0], solved.nodes[i][1]).diagonal) ++off_diagonal;
    CHECK(sol.cert.points.size() == solved.size() + off_diagonal);
    for (const auto& lp : sol.cert.points) {
      const auto& mate = sol.cert.points[lp.sigma];
      CHECK(mate.node == lp.node);
      CHECK(mate.z1 == lp.z2);
      CHECK(mate.z2 == lp.z1);
    }
  }
}

TEST_CASE("scaling the targets keeps a problem feasible") {
  Rng rng(62);
  for (int t = 0; t < 4; ++t) {
    const PickProblem pb = testsupport::sampled_pick_problem(rng, 1 + t % 2, 1, 2, 3);
    for (double scale : {0.9, 0.5, 0.1}) {
      PickProblem sc = pb;
      for (auto& a : sc.targets) a *= scale;
      const AglerCert cert = solve_agler_feasibility(sc);
      CHECK(cert.residual <= 1e-8);
    }
  }
}
