#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace emgpr {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool operator==(const Matrix& other) const = default;

  static Matrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
std::vector<double> matvec(const Matrix& m, std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
double frobenius_norm(const Matrix& m);

/// Per-column means of a data matrix (one observation per row).
std::vector<double> column_means(const Matrix& x);

/// Cholesky factor L (lower triangular, A = L L^T) of a symmetric positive
/// definite matrix. Throws NumericError when a pivot is not positive.
Matrix cholesky(const Matrix& a);

/// Solve L y = b for lower-triangular L.
std::vector<double> solve_lower(const Matrix& l, std::span<const double> b);
/// Solve L^T x = b for lower-triangular L.
std::vector<double> solve_lower_transpose(const Matrix& l, std::span<const double> b);

}  // namespace emgpr
