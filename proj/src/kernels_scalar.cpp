#include <algorithm>
#include <cmath>

#include "symdisc/kernels.hpp"

namespace symdisc::kernels::scalar {

void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
          std::size_t k, std::size_t n) noexcept {
  std::fill(c, c + m * n, Complex{});
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const Complex aip = a[i * k + p];
      const Complex* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void gemm_adjoint_left(const Complex* a, const Complex* b, Complex* c,
                       std::size_t m, std::size_t k, std::size_t n) noexcept {
  std::fill(c, c + m * n, Complex{});
  for (std::size_t p = 0; p < k; ++p) {
    const Complex* arow = a + p * m;
    const Complex* brow = b + p * n;
    for (std::size_t i = 0; i < m; ++i) {
      const Complex api = std::conj(arow[i]);
      Complex* crow = c + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += api * brow[j];
    }
  }
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

double max_abs_diff(const Complex* x, const Complex* y, std::size_t len) noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < len; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace symdisc::kernels::scalar
