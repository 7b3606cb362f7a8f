#ifndef HERON_MATRIX_HPP
#define HERON_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "heron/errors.hpp"

namespace heron {

/// Dense real matrix, row-major. The universal carrier for A, B, X.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  const std::vector<double>& entries() const { return entries_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(double c, const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix schur_product(const Matrix& y, const Matrix& z);

double frobenius_norm(const Matrix& a);

/// Determinant via LU with partial pivoting. Returns 0 for singular input.
double determinant(const Matrix& a);

}  // namespace heron

#endif
