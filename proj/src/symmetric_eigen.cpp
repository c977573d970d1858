#include "procrec/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "procrec/error.hpp"

namespace procrec {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the rotation J (J_pp = J_qq = c, J_pq = s, J_qp = -s):
// a <- J^T a J, v <- v J.
void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> DenseMatrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

SymmetricEigen jacobi_eigen(const DenseMatrix& symmetric, const JacobiOptions& options) {
  if (symmetric.rows() != symmetric.cols()) throw InputError("eigendecomposition needs a square matrix");
  const std::size_t n = symmetric.rows();
  DenseMatrix a = symmetric;
  DenseMatrix v = DenseMatrix::identity(n);

  SymmetricEigen result;
  while (true) {
    if (off_diagonal_norm(a) < options.off_diagonal_tolerance) {
      result.converged = true;
      break;
    }
    if (result.sweeps >= options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++result.sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  result.values.resize(n);
  result.vectors = DenseMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    result.values[col] = a(src, src);
    std::size_t pivot = 0;
    for (std::size_t r = 1; r < n; ++r)
      if (std::abs(v(r, src)) > std::abs(v(pivot, src))) pivot = r;
    const double sign = v(pivot, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < n; ++r) result.vectors(r, col) = sign * v(r, src);
  }
  return result;
}

}  // namespace procrec
