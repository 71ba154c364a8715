// AVX2/FMA variants of the complex kernels. This translation unit is built
// with -mavx2 -mfma and must only be entered after a CPUID check.
//
// A __m256d holds two interleaved complex doubles (re0, im0, re1, im1).
// The product alpha * b for a broadcast alpha = (ar, ai) is
//   fmaddsub(ar, b, ai * swap(b))
// where swap exchanges re/im within each 128-bit lane.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "symdisc/kernels.hpp"

namespace symdisc::kernels::avx2 {
namespace {

inline void cmul_acc_row(Complex alpha, const Complex* x, Complex* y,
                         std::size_t len) noexcept {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    const __m256d b = _mm256_loadu_pd(xd + 2 * j);
    const __m256d bswap = _mm256_permute_pd(b, 0b0101);
    const __m256d prod = _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
    _mm256_storeu_pd(yd + 2 * j, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * j), prod));
  }
  for (; j < len; ++j) {
    const double br = x[j].real();
    const double bi = x[j].imag();
    y[j] = Complex(y[j].real() + (alpha.real() * br - alpha.imag() * bi),
                   y[j].imag() + (alpha.real() * bi + alpha.imag() * br));
  }
}

}  // namespace

void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
          std::size_t k, std::size_t n) noexcept {
  std::fill(c, c + m * n, Complex{});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) cmul_acc_row(a[i * k + p], b + p * n, c + i * n, n);
  }
}

void gemm_adjoint_left(const Complex* a, const Complex* b, Complex* c,
                       std::size_t m, std::size_t k, std::size_t n) noexcept {
  std::fill(c, c + m * n, Complex{});
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t i = 0; i < m; ++i) {
      cmul_acc_row(std::conj(a[p * m + i]), b + p * n, c + i * n, n);
    }
  }
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept {
  cmul_acc_row(alpha, x, y, len);
}

double max_abs_diff(const Complex* x, const Complex* y, std::size_t len) noexcept {
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<const double*>(y);
  __m256d best = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(xd + 2 * j), _mm256_loadu_pd(yd + 2 * j));
    const __m256d sq = _mm256_mul_pd(d, d);
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m2 = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; j < len; ++j) {
    const Complex d = x[j] - y[j];
    m2 = std::max(m2, d.real() * d.real() + d.imag() * d.imag());
  }
  return std::sqrt(m2);
}

}  // namespace symdisc::kernels::avx2
