#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <thread>
#include <vector>

namespace symdisc {

/// Counter-based generator: draw i of stream (seed) is a pure function of
/// (seed, i), so batches can be generated out of order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0, std::uint64_t counter = 0) noexcept
      : seed_(seed), counter_(counter) {}

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() noexcept { return mix(mix(seed_) ^ (counter_++ * 0xd1b54a32d192ed03ULL)); }

  /// Uniform in [0, 1).
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  double normal() noexcept {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::complex<double> complex_normal() noexcept {
    const double re = normal();
    return {re, normal()};
  }

  std::complex<double> unit_circle() noexcept {
    return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
  }

  /// Uniform modulus-squared, uniform angle.
  std::complex<double> unit_disc() noexcept {
    const double r = std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }

  /// Independent substream, e.g. one per sample index.
  Rng substream(std::uint64_t index) const noexcept { return Rng(mix(seed_ ^ mix(index + 1)), 0); }

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

/// Max of f(i) over i in [0, n). Each worker takes a contiguous range and
/// the partial maxima are combined in index order, so the result does not
/// depend on `threads`.
template <class F>
double parallel_max(std::size_t n, unsigned threads, F&& f) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, f(i));
    return best;
  }
  std::vector<double> partial(threads, 0.0);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      double best = 0.0;
      for (std::size_t i = lo; i < hi; ++i) best = std::max(best, f(i));
      partial[t] = best;
    });
  }
  for (auto& th : pool) th.join();
  return *std::max_element(partial.begin(), partial.end());
}

}  // namespace symdisc
