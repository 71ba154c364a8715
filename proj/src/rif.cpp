#include "symdisc/rif.hpp"

#include <cmath>
#include <string>

#include "symdisc/error.hpp"
#include "symdisc/rng.hpp"

namespace symdisc {
namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kPoleTol = 1e-13;
constexpr double kSkipTol = 1e-10;

GdPoint boundary_point(std::size_t d, Rng rng) {
  std::vector<Complex> z(d);
  for (auto& v : z) v = rng.unit_circle();
  return sym_point(z);
}

GdPoint domain_point(std::size_t d, Rng rng) {
  std::vector<Complex> z(d);
  for (auto& v : z) v = rng.unit_disc();
  return sym_point(z);
}

}  // namespace

RationalInnerFn make_rif(const MultiPoly& xi, int k, Complex tau) {
  if (xi.dim() == 0) throw Error(ErrorCode::DimensionError, "xi must have at least one variable");
  const double dev = std::abs(std::abs(tau) - 1.0);
  if (!(dev <= 1e-12)) throw Error(ErrorCode::UnimodularityError, "|tau| != 1", dev);
  if (xi.is_zero()) throw Error(ErrorCode::ZeroInDomain, "xi is the zero polynomial");
  RationalInnerFn f;
  f.d = xi.dim();
  f.k = k;
  f.tau = tau;
  f.xi = xi;
  f.numerator = reflect_G(xi, k);
  return f;
}

RationalInnerFn build_rif(const MultiPoly& xi, int k, Complex tau, std::size_t samples,
                          std::uint64_t seed) {
  RationalInnerFn f = make_rif(xi, k, tau);
  const Rng base(seed);
  // The origin is always probed first; the rest are random.
  for (std::size_t i = 0; i < samples; ++i) {
    const GdPoint w = i == 0 ? GdPoint(f.d, 0.0) : domain_point(f.d, base.substream(i));
    const double m = std::abs(poly_eval(xi, w));
    if (m <= kZeroTol) {
      throw Error(ErrorCode::ZeroInDomain, "xi vanishes at a sampled domain point", m);
    }
  }
  return f;
}

Complex eval_rif(const RationalInnerFn& f, const GdPoint& w) {
  const Complex den = poly_eval(f.xi, w);
  if (std::abs(den) <= kPoleTol) throw Error(ErrorCode::PoleHit, "xi vanishes", std::abs(den));
  return f.tau * poly_eval(f.numerator, w) / den;
}

std::vector<GdPoint> sample_bGd(std::size_t d, std::size_t count, std::uint64_t seed) {
  std::vector<GdPoint> out;
  out.reserve(count);
  const Rng base(seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(boundary_point(d, base.substream(i)));
  return out;
}

std::vector<GdPoint> sample_Gd(std::size_t d, std::size_t count, std::uint64_t seed) {
  std::vector<GdPoint> out;
  out.reserve(count);
  const Rng base(seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(domain_point(d, base.substream(i)));
  return out;
}

double boundary_deviation(const MultiPoly& num, const MultiPoly& den, Complex tau, std::size_t d,
                          std::size_t count, std::uint64_t seed, unsigned threads) {
  if (num.dim() != d || den.dim() != d) {
    throw Error(ErrorCode::DimensionError, "polynomials must have " + std::to_string(d) +
                                               " variables");
  }
  const Rng base(seed);
  return parallel_max(count, threads, [&](std::size_t i) {
    const GdPoint w = boundary_point(d, base.substream(i));
    const Complex q = poly_eval(den, w);
    if (std::abs(q) <= kSkipTol) return 0.0;
    return std::abs(std::abs(tau * poly_eval(num, w) / q) - 1.0);
  });
}

double check_inner(const RationalInnerFn& f, std::size_t count, std::uint64_t seed,
                   unsigned threads) {
  return boundary_deviation(f.numerator, f.xi, f.tau, f.d, count, seed, threads);
}

}  // namespace symdisc
