#pragma once

// Dense complex inner loops used by ComplexMatrix and the feasibility solver.
//
// Each kernel exists as a scalar reference implementation and, on x86-64
// builds with SYMDISC_HAVE_AVX2, as an AVX2/FMA variant. The dispatching
// entry points pick a variant once per process from CPUID. All matrices are
// dense, row-major, with no padding between rows.

#include <complex>
#include <cstddef>
#include <string_view>

namespace symdisc::kernels {

using Complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b) noexcept;

/// Backend chosen for this process. Setting SYMDISC_FORCE_SCALAR=1 in the
/// environment pins the scalar kernels.
Backend active_backend() noexcept;

/// True when the AVX2 kernels were compiled in and the CPU supports them.
bool avx2_available() noexcept;

// c (m x n) = a (m x k) * b (k x n)
void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
          std::size_t k, std::size_t n) noexcept;

// c (m x n) = a^H * b where a is (k x m) and b is (k x n)
void gemm_adjoint_left(const Complex* a, const Complex* b, Complex* c,
                       std::size_t m, std::size_t k, std::size_t n) noexcept;

// y += alpha * x over len complex entries
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept;

// max_i |x_i - y_i|
double max_abs_diff(const Complex* x, const Complex* y, std::size_t len) noexcept;

namespace scalar {
void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
          std::size_t k, std::size_t n) noexcept;
void gemm_adjoint_left(const Complex* a, const Complex* b, Complex* c,
                       std::size_t m, std::size_t k, std::size_t n) noexcept;
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept;
double max_abs_diff(const Complex* x, const Complex* y, std::size_t len) noexcept;
}  // namespace scalar

#ifdef SYMDISC_HAVE_AVX2
namespace avx2 {
void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
          std::size_t k, std::size_t n) noexcept;
void gemm_adjoint_left(const Complex* a, const Complex* b, Complex* c,
                       std::size_t m, std::size_t k, std::size_t n) noexcept;
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept;
double max_abs_diff(const Complex* x, const Complex* y, std::size_t len) noexcept;
}  // namespace avx2
#endif

}  // namespace symdisc::kernels
