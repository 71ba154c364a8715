#include <cstdlib>
#include <cstring>

#include "symdisc/kernels.hpp"

namespace symdisc::kernels {
namespace {

struct Table {
  Backend backend;
  decltype(&scalar::gemm) gemm;
  decltype(&scalar::gemm_adjoint_left) gemm_adjoint_left;
  decltype(&scalar::axpy) axpy;
  decltype(&scalar::max_abs_diff) max_abs_diff;
};

bool cpu_has_avx2() noexcept {
#if defined(SYMDISC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Table select() noexcept {
  const char* force = std::getenv("SYMDISC_FORCE_SCALAR");
  const bool forced = force != nullptr && std::strcmp(force, "0") != 0 && force[0] != '\0';
#ifdef SYMDISC_HAVE_AVX2
  if (!forced && cpu_has_avx2()) {
    return {Backend::Avx2, &avx2::gemm, &avx2::gemm_adjoint_left, &avx2::axpy,
            &avx2::max_abs_diff};
  }
#else
  (void)forced;
#endif
  return {Backend::Scalar, &scalar::gemm, &scalar::gemm_adjoint_left, &scalar::axpy,
          &scalar::max_abs_diff};
}

const Table& table() noexcept {
  static const Table t = select();
  return t;
}

}  // namespace

std::string_view to_string(Backend b) noexcept {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

Backend active_backend() noexcept { return table().backend; }

bool avx2_available() noexcept { return cpu_has_avx2(); }

void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m,
          std::size_t k, std::size_t n) noexcept {
  table().gemm(a, b, c, m, k, n);
}

void gemm_adjoint_left(const Complex* a, const Complex* b, Complex* c,
                       std::size_t m, std::size_t k, std::size_t n) noexcept {
  table().gemm_adjoint_left(a, b, c, m, k, n);
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept {
  table().axpy(alpha, x, y, len);
}

double max_abs_diff(const Complex* x, const Complex* y, std::size_t len) noexcept {
  return table().max_abs_diff(x, y, len);
}

}  // namespace symdisc::kernels
