#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace procrec {

/// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<double> column(std::size_t c) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct JacobiOptions {
  double off_diagonal_tolerance = 1e-12;  // Frobenius norm of the off-diagonal part
  int max_sweeps = 100;
};

/// Eigenpairs sorted by descending eigenvalue (ties keep diagonal order).
/// Column i of `vectors` pairs with `values[i]`; each column has its
/// largest-magnitude entry made positive, ties going to the lowest index.
struct SymmetricEigen {
  std::vector<double> values;
  DenseMatrix vectors;
  int sweeps = 0;
  bool converged = false;
};

/// Cyclic Jacobi rotations. Throws InputError if `symmetric` is not square.
SymmetricEigen jacobi_eigen(const DenseMatrix& symmetric, const JacobiOptions& options = {});

}  // namespace procrec
