#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symdisc/realization.hpp"
#include "symdisc/sympoly.hpp"

namespace symdisc {

/// Nodes (s, p) in G with M x N targets.
struct PickProblem {
  std::vector<GdPoint> nodes;
  std::vector<ComplexMatrix> targets;

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t M() const { return targets.empty() ? 0 : targets.front().rows(); }
  std::size_t N() const { return targets.empty() ? 0 : targets.front().cols(); }

  /// Throws DimensionError, DomainError (node outside G or repeated),
  /// ShapeMismatch, NotContraction.
  void validate() const;
};

/// Roots (z1, z2) of t^2 - s t + p ordered by (re, im); the sigma image is
/// (z2, z1). A repeated root gives z1 == z2 exactly.
struct LiftedNode {
  Complex z1, z2;
  bool diagonal;
};

LiftedNode lift_node(Complex s, Complex p);

/// One point of the lifted set in the bidisc.
struct LiftedPoint {
  Complex z1, z2;
  std::size_t node;   ///< index into PickProblem::nodes
  std::size_t sigma;  ///< index of the point with swapped coordinates
};

/// Agler decomposition of the lifted problem:
///   I - A_a^H A_b = (1 - conj(w_a1) w_b1) [G1]_ab + (1 - conj(w_a2) w_b2) [G2]_ab
/// with N x N blocks indexed by lifted points.
struct AglerCert {
  std::vector<LiftedPoint> points;
  std::size_t N = 0;
  ComplexMatrix gamma1, gamma2;
  ComplexMatrix F1, F2;  ///< d_j x (points * N), F_j^H F_j = gamma_j
  double residual = 0.0;
  std::size_t iterations = 0;

  ComplexMatrix F1_at(std::size_t point) const { return F1.block(0, point * N, F1.rows(), N); }
  ComplexMatrix F2_at(std::size_t point) const { return F2.block(0, point * N, F2.rows(), N); }
  /// Index of the lifted point z_i (first root ordering) for node i.
  std::size_t primary_point(std::size_t node) const;
};

struct PickOptions {
  std::size_t max_iters = 50000;
  double tol = 1e-8;
  /// Gram tolerance for the two isometry extensions.
  double gram_tol = 1e-7;
  /// Final interpolation check.
  double interp_tol = 1e-6;
};

/// Lifted points of a validated problem, z before z^sigma for each node.
std::vector<LiftedPoint> lift_problem(const PickProblem& problem);

/// Max entry of the blockwise Agler identity defect.
double agler_residual(const PickProblem& problem, const std::vector<LiftedPoint>& points,
                      const ComplexMatrix& gamma1, const ComplexMatrix& gamma2);

/// Alternating projections (Dykstra-corrected on the cone) between the
/// affine Agler set and PSD x PSD, interleaved with a low-rank
/// Levenberg-Marquardt polish on Gram factors; then sigma-symmetrized.
/// Throws Infeasible with the best residual when it stays above tol.
AglerCert solve_agler_feasibility(const PickProblem& problem, const PickOptions& opts = {});

struct DoublySymmetricTau {
  ComplexMatrix tau;               ///< h x h unitary, h = d1 + d2
  std::vector<ComplexMatrix> F;    ///< per node, h x N
};

DoublySymmetricTau build_doubly_symmetric_tau(const AglerCert& cert, double gram_tol = 1e-7);

/// Isometric colligation from [I; phi F_i] xi -> [A_i; F_i] xi. Requires
/// M >= N. Throws GramMismatch, DimensionError.
Colligation lurking_isometry(const PickProblem& problem, const ComplexMatrix& tau,
                             const std::vector<ComplexMatrix>& F, double gram_tol = 1e-7);

struct PickSolution {
  Colligation colligation;
  AglerCert cert;                ///< of the problem actually solved
  DoublySymmetricTau tau;        ///< idem
  bool coisometric = false;      ///< N > M: adjoint route was used
  double interpolation_residual = 0.0;
};

PickSolution solve_pick_detailed(const PickProblem& problem, const PickOptions& opts = {});
Colligation solve_pick(const PickProblem& problem, const PickOptions& opts = {});

/// Conjugated nodes, adjoint targets.
PickProblem adjoint_problem(const PickProblem& problem);

double interpolation_residual(const PickProblem& problem, const Colligation& v);

/// max over node pairs of
///   |I + F_i^H phi_i^H phi_j F_j - A_i^H A_j - F_i^H F_j|
double condition_solv_residual(const PickProblem& problem, const ComplexMatrix& tau,
                               const std::vector<ComplexMatrix>& F);

/// max |Psi^H Psi - I| (or |Psi Psi^H - I| when coisometric) over boundary
/// samples, skipping points where cond(I - D phi) > max_condition.
double boundary_inner_residual(const Colligation& v, bool coisometric, std::size_t count,
                               std::uint64_t seed, double max_condition = 1e10);

/// max defect of G1(sigma a, sigma b) = G2(a, b) over all block pairs.
double double_symmetry_residual(const AglerCert& cert);

}  // namespace symdisc
