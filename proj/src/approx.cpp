#include "symdisc/approx.hpp"

#include <cmath>
#include <numbers>

#include "symdisc/error.hpp"
#include "symdisc/linalg.hpp"
#include "symdisc/rng.hpp"

namespace symdisc {
namespace {

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

Complex disc_point(double u, double v, double radius) {
  return std::polar(radius * std::sqrt(u), 2.0 * std::numbers::pi * v);
}

}  // namespace

std::vector<GdPoint> dense_sequence(std::size_t count, double radius, std::uint64_t seed) {
  std::vector<GdPoint> out;
  out.reserve(count);
  const std::uint64_t offset = 1 + Rng::mix(seed) % 4096;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t k = offset + i;
    const std::vector<Complex> z = {
        disc_point(radical_inverse(k, 2), radical_inverse(k, 3), radius),
        disc_point(radical_inverse(k, 5), radical_inverse(k, 7), radius)};
    out.push_back(sym_point(z));
  }
  return out;
}

std::vector<GdPoint> compact_grid(std::size_t count, double radius, std::uint64_t seed) {
  std::vector<GdPoint> out;
  out.reserve(count);
  const Rng base(seed ^ 0x67726964ULL);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = base.substream(i);
    const std::vector<Complex> z = {radius * rng.unit_disc(), radius * rng.unit_disc()};
    out.push_back(sym_point(z));
  }
  return out;
}

ApproxRun caratheodory_sequence(const Evaluator& target, const ApproxOptions& opts) {
  ApproxRun run;
  run.grid = compact_grid(opts.grid_size, opts.radius, opts.seed);
  run.sequence = dense_sequence(opts.stages * opts.nodes_per_stage, opts.node_radius, opts.seed);

  std::vector<ComplexMatrix> grid_values(run.grid.size());
  double target_norm = 0.0;
  for (std::size_t g = 0; g < run.grid.size(); ++g) {
    grid_values[g] = target(run.grid[g][0], run.grid[g][1]);
    target_norm = std::max(target_norm, linalg::operator_norm(grid_values[g]));
  }
  if (target_norm > 1.0 + 1e-9) {
    throw Error(ErrorCode::NotContraction, "target is not Schur class on the grid", target_norm);
  }

  PickProblem problem;
  for (std::size_t stage = 0; stage < opts.stages; ++stage) {
    for (std::size_t j = 0; j < opts.nodes_per_stage; ++j) {
      const GdPoint& w = run.sequence[stage * opts.nodes_per_stage + j];
      problem.nodes.push_back(w);
      problem.targets.push_back(target(w[0], w[1]));
    }
    Colligation v = solve_pick(problem, opts.pick);
    const double dev = parallel_max(run.grid.size(), opts.threads, [&](std::size_t g) {
      return linalg::operator_norm(eval_tfr(v, run.grid[g][0], run.grid[g][1]) - grid_values[g]);
    });
    run.stages.push_back({problem.size(), dev, std::move(v)});
  }
  return run;
}

ApproxRun caratheodory_sequence(const Colligation& target, const ApproxOptions& opts) {
  return caratheodory_sequence([&](Complex s, Complex p) { return eval_tfr(target, s, p); }, opts);
}

}  // namespace symdisc
