#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace symdisc {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Every operator symbol in the library
/// (colligation blocks, kernels, factors) is carried by this type.
///
/// Shapes with a zero dimension are valid; they stand for maps to or from
/// the zero space (e.g. a colligation with an empty state space).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionError if entries.size() != rows * cols, and
  /// DomainError on NaN/Inf entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix scalar(Complex value) { return ComplexMatrix(1, 1, {value}); }
  /// rows x cols with ones on the main diagonal
  static ComplexMatrix eye(std::size_t rows, std::size_t cols);
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& m);
  ComplexMatrix col(std::size_t c) const { return block(0, c, rows_, 1); }

  /// Re-checks the finiteness invariant; throws DomainError.
  void validate() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

/// a^H * b without materializing the adjoint.
ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-entry norm.
double max_abs(const ComplexMatrix& m) noexcept;
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |M^H M - I|
double isometry_residual(const ComplexMatrix& m);
/// max |M M^H - I|
double coisometry_residual(const ComplexMatrix& m);

ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix vstack(const ComplexMatrix& a, const ComplexMatrix& b);
/// [[a, 0], [0, b]]
ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace symdisc
