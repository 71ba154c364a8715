#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symdisc/pick.hpp"

namespace symdisc {

/// (s, p) -> M x N value of a Schur-class function.
using Evaluator = std::function<ComplexMatrix(Complex, Complex)>;

struct ApproxStage {
  std::size_t nodes;
  double sup_dev;
  Colligation interpolant;
};

struct ApproxRun {
  std::vector<GdPoint> sequence;  ///< all nodes, in order of use
  std::vector<GdPoint> grid;
  std::vector<ApproxStage> stages;
};

struct ApproxOptions {
  std::size_t stages = 4;
  std::size_t nodes_per_stage = 2;
  std::size_t grid_size = 100;
  double radius = 0.7;        ///< grid points are pi(z) with |z_i| <= radius
  double node_radius = 0.7;   ///< dense-sequence points likewise
  std::uint64_t seed = 0;
  unsigned threads = 1;
  PickOptions pick;
};

/// Deterministic dense sequence in G: pi of a Halton sequence on the
/// bidisc of the given radius, starting at an index offset derived from
/// the seed.
std::vector<GdPoint> dense_sequence(std::size_t count, double radius, std::uint64_t seed);

/// Random points pi(z) with |z_i| <= radius.
std::vector<GdPoint> compact_grid(std::size_t count, double radius, std::uint64_t seed);

/// Stage n interpolates the target at the first n * nodes_per_stage points
/// of the dense sequence and records the sup over the grid of
/// |Psi_n - target|. Throws NotContraction if the target exceeds norm 1 on
/// the grid; Infeasible propagates from the Pick solver.
ApproxRun caratheodory_sequence(const Evaluator& target, const ApproxOptions& opts);
ApproxRun caratheodory_sequence(const Colligation& target, const ApproxOptions& opts);

}  // namespace symdisc
