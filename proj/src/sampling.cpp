#include "cpb/sampling.hpp"

#include <cmath>
#include <numbers>

namespace cpb {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

double radical_inverse(std::uint64_t index, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

PointList quasi_random_sphere(int d, int count, std::uint64_t start) {
  const int pairs = (d + 1) / 2;
  if (2 * pairs > static_cast<int>(std::size(kPrimes))) throw InvalidArgument("quasi_random_sphere: dimension too large");
  PointList out;
  out.reserve(count);
  for (std::uint64_t i = start; static_cast<int>(out.size()) < count; ++i) {
    Vec g(2 * pairs);
    for (int p = 0; p < pairs; ++p) {
      const double u1 = radical_inverse(i, kPrimes[2 * p]);
      const double u2 = radical_inverse(i, kPrimes[2 * p + 1]);
      const double r = std::sqrt(-2.0 * std::log(u1));
      g(2 * p) = r * std::cos(2.0 * std::numbers::pi * u2);
      g(2 * p + 1) = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    Vec x = g.head(d);
    const double n = x.norm();
    if (n < 1e-12) continue;
    out.push_back(x / n);
  }
  return out;
}

PointList test_directions(int d, int count, const PointList& extra) {
  PointList dirs = quasi_random_sphere(d, count);
  for (int j = 0; j < d; ++j) {
    dirs.push_back(Vec::Unit(d, j));
    dirs.push_back(-Vec::Unit(d, j));
  }
  for (const auto& e : extra) {
    const double n = e.norm();
    if (n > 0.0) dirs.push_back(e / n);
  }
  return dirs;
}

Vec random_gaussian(int d, Rng& rng) {
  std::normal_distribution<double> g;
  Vec x(d);
  for (int i = 0; i < d; ++i) x(i) = g(rng);
  return x;
}

Vec random_unit_vector(int d, Rng& rng) {
  while (true) {
    Vec x = random_gaussian(d, rng);
    const double n = x.norm();
    if (n > 1e-9) return x / n;
  }
}

Vec random_in_ball(int d, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return random_unit_vector(d, rng) * std::pow(u(rng), 1.0 / d);
}

Polytope random_simplex(int d, Rng& rng) {
  while (true) {
    Mat v(d, d + 1);
    for (int i = 0; i <= d; ++i) v.col(i) = random_gaussian(d, rng);
    Mat e = v.rightCols(d).colwise() - v.col(0);
    Eigen::JacobiSVD<Mat> svd(e);
    const Vec& s = svd.singularValues();
    if (s(d - 1) > 0.05 * s(0)) return Polytope::from_points(v);
  }
}

Polytope random_hull(int d, int n, Rng& rng) {
  if (n < d + 1) throw InvalidArgument("random_hull: need at least d+1 points");
  Mat v(d, n);
  for (int i = 0; i < n; ++i) v.col(i) = random_in_ball(d, rng);
  return Polytope::from_points(v);
}

}  // namespace cpb
