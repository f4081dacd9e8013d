#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dctc::core {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument when rows * cols != entries.size().
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  /// |a><b|
  static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Complex> entries() { return entries_; }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  /// Largest entrywise modulus of (this - other). Shapes must agree.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool is_hermitian(double tol) const;
  /// M^dagger M == I entrywise within tol.
  bool is_unitary(double tol) const;

  std::vector<Complex> apply(std::span<const Complex> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

/// Kronecker product, a on the more significant index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace dctc::core
