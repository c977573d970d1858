#pragma once

// Independent reference computations for the PCA and metric tests. Nothing
// here calls into the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

inline std::vector<double> column_means(const std::vector<std::vector<double>>& x) {
  std::vector<double> mu(x.at(0).size(), 0.0);
  for (const auto& row : x)
    for (std::size_t j = 0; j < row.size(); ++j) mu[j] += row[j];
  for (auto& m : mu) m /= static_cast<double>(x.size());
  return mu;
}

// Sample covariance straight from the definition.
inline std::vector<std::vector<double>> covariance(const std::vector<std::vector<double>>& x) {
  const auto mu = column_means(x);
  const std::size_t d = mu.size();
  std::vector<std::vector<double>> c(d, std::vector<double>(d, 0.0));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      double s = 0.0;
      for (const auto& row : x) s += (row[a] - mu[a]) * (row[b] - mu[b]);
      c[a][b] = s / static_cast<double>(x.size() - 1);
    }
  return c;
}

inline Mat3 to_mat3(const std::vector<std::vector<double>>& c) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = c[i][j];
  return m;
}

// det(A - t I) = -t^3 + c2 t^2 - c1 t + c0; returns {c2, c1, c0}.
inline Vec3 char_poly(const Mat3& a) {
  const double tr = a[0][0] + a[1][1] + a[2][2];
  const double minors = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0] +
                        a[1][1] * a[2][2] - a[1][2] * a[2][1];
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return {tr, minors, det};
}

// Roots of the characteristic polynomial by bisection between the cubic's
// critical points, then Newton polishing. Assumes three distinct real roots.
inline Vec3 eigenvalues_desc(const Mat3& a) {
  const auto [c2, c1, c0] = char_poly(a);
  auto p = [&](double t) { return -t * t * t + c2 * t * t - c1 * t + c0; };
  auto dp = [&](double t) { return -3 * t * t + 2 * c2 * t - c1; };
  // Critical points of p: 3t^2 - 2 c2 t + c1 = 0.
  const double disc = std::sqrt(std::max(0.0, 4 * c2 * c2 - 12 * c1));
  const double lo_crit = (2 * c2 - disc) / 6, hi_crit = (2 * c2 + disc) / 6;
  double bound = 1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) bound += std::abs(a[i][j]);
  auto bisect = [&](double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if ((p(lo) < 0) == (p(mid) < 0))
        lo = mid;
      else
        hi = mid;
    }
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 5; ++it)
      if (dp(t) != 0.0) t -= p(t) / dp(t);
    return t;
  };
  Vec3 r{bisect(hi_crit, bound), bisect(lo_crit, hi_crit), bisect(-bound, lo_crit)};
  return r;
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Unit eigenvector for a simple eigenvalue: the null space of (A - t I) is
// spanned by the largest cross product of two of its rows. The
// largest-magnitude component is made positive.
inline Vec3 eigenvector(const Mat3& a, double t) {
  Mat3 m = a;
  for (int i = 0; i < 3; ++i) m[i][i] -= t;
  Vec3 best{};
  double best_norm = -1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Vec3 c = cross(m[i], m[j]);
      double n = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
      if (n > best_norm) best_norm = n, best = c;
    }
  for (auto& x : best) x /= best_norm;
  int arg = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(best[i]) > std::abs(best[arg])) arg = i;
  if (best[arg] < 0)
    for (auto& x : best) x = -x;
  return best;
}

// Algorithm 1 done element by element.
struct Buckets {
  std::set<std::string> tp, fp, fn, tn;
};

inline Buckets bucket(const std::set<std::string>& recommended, const std::set<std::string>& tested,
                      const std::set<std::string>& universe) {
  Buckets b;
  for (const auto& e : universe) {
    const bool r = recommended.count(e) > 0, t = tested.count(e) > 0;
    (r && t ? b.tp : r ? b.fp : t ? b.fn : b.tn).insert(e);
  }
  return b;
}

}  // namespace oracle
