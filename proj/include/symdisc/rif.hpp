#pragma once

#include <cstdint>
#include <vector>

#include "symdisc/sympoly.hpp"

namespace symdisc {

/// f = tau * reflect_G(xi, k) / xi on G_d.
struct RationalInnerFn {
  std::size_t d = 0;
  int k = 0;
  Complex tau = 1.0;
  MultiPoly xi;
  MultiPoly numerator;  ///< reflect_G(xi, k)
};

/// Validates |tau| = 1 and k >= total degree, and fills the numerator.
/// Does not sample the domain. Throws UnimodularityError, DegreeError.
RationalInnerFn make_rif(const MultiPoly& xi, int k, Complex tau);

/// make_rif plus a randomized zero search of xi over `samples` points of
/// G_d. Throws ZeroInDomain if some |xi(w)| <= 1e-12.
RationalInnerFn build_rif(const MultiPoly& xi, int k, Complex tau, std::size_t samples = 10000,
                          std::uint64_t seed = 0);

/// Throws PoleHit if |xi(w)| <= 1e-13.
Complex eval_rif(const RationalInnerFn& f, const GdPoint& w);

/// pi_d of uniform torus points.
std::vector<GdPoint> sample_bGd(std::size_t d, std::size_t count, std::uint64_t seed);
/// pi_d of uniform polydisc points.
std::vector<GdPoint> sample_Gd(std::size_t d, std::size_t count, std::uint64_t seed);

/// max ||f(w)| - 1| over boundary samples, skipping |xi(w)| <= 1e-10.
double check_inner(const RationalInnerFn& f, std::size_t count, std::uint64_t seed,
                   unsigned threads = 1);

/// max ||tau num(w) / den(w)| - 1| over boundary samples of b G_d, skipping
/// |den(w)| <= 1e-10. No inner-ness is assumed of (num, den).
double boundary_deviation(const MultiPoly& num, const MultiPoly& den, Complex tau, std::size_t d,
                          std::size_t count, std::uint64_t seed, unsigned threads = 1);

}  // namespace symdisc
