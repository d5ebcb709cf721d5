#pragma once

// Reference computations used only by the tests. They avoid the hull and
// mixed-volume code paths of the library.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace oracle {

inline double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

/// Volume of the simplex with the given vertex columns.
inline double simplex_volume(const Eigen::MatrixXd& v) {
  const int d = static_cast<int>(v.rows());
  Eigen::MatrixXd e(d, d);
  for (int j = 0; j < d; ++j) e.col(j) = v.col(j + 1) - v.col(0);
  return std::abs(e.determinant()) / factorial(d);
}

/// Area of the convex hull of planar points (monotone chain + shoelace).
inline double hull_area(std::vector<Eigen::Vector2d> p) {
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); });
  if (p.size() < 3) return 0.0;
  auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<Eigen::Vector2d> h(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  double a = 0.0;
  for (size_t i = 0; i < h.size(); ++i) {
    const auto& u = h[i];
    const auto& v = h[(i + 1) % h.size()];
    a += u.x() * v.y() - u.y() * v.x();
  }
  return 0.5 * std::abs(a);
}

/// Permanent by expansion over all permutations.
inline double permanent(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  double s = 0.0;
  do {
    double t = 1.0;
    for (int i = 0; i < n; ++i) t *= a(i, p[i]);
    s += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

/// Volume of the unit ball in R^d.
inline double ball_volume(int d) { return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0); }

}  // namespace oracle
