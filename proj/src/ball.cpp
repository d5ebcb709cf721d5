#include "cpb/ball.hpp"

#include "cpb/mixed_volume.hpp"
#include "cpb/sampling.hpp"

#include <cmath>
#include <limits>

namespace cpb {

BallApproximant make_ball_approximant(int d, int N) {
  if (d < 2) throw InvalidArgument("ball approximant: dimension must be at least 2");
  if (N < 0) throw InvalidArgument("ball approximant: N must be nonnegative");
  PointList pts;
  for (int j = 0; j < d; ++j) {
    pts.push_back(Vec::Unit(d, j));
    for (int k = j + 1; k < d; ++k) {
      for (double s : {1.0, -1.0}) pts.push_back((Vec::Unit(d, j) + s * Vec::Unit(d, k)) / std::sqrt(2.0));
    }
  }
  for (const auto& x : quasi_random_sphere(d, 2 * d * N)) pts.push_back(x);
  const size_t half = pts.size();
  for (size_t i = 0; i < half; ++i) pts.push_back(-pts[i]);

  BallApproximant b;
  b.body = convex_hull(pts);
  b.N = N;
  double r = std::numeric_limits<double>::infinity();
  for (const auto& f : b.body.facets()) r = std::min(r, f.offset);
  b.delta = 1.0 / r - 1.0;
  return b;
}

Estimate bracket(double value, int i, const BallApproximant& ball) {
  Estimate e;
  e.value = value;
  e.lower = value;
  e.upper = value * std::pow(1.0 + ball.delta, i);
  return e;
}

namespace {

void check_ball(const Polytope& k, const BallApproximant& ball) {
  if (k.dim() != ball.body.dim()) throw InvalidArgument("quermassintegral: ball approximant has wrong dimension");
}

}  // namespace

Estimate mixed_quermassintegral(const Polytope& k, const Polytope& l, int i, const BallApproximant& ball) {
  check_ball(k, ball);
  const int d = k.dim();
  if (i < 0 || i > d - 1) throw InvalidArgument("mixed quermassintegral: index out of range");
  if (l.dim() != d) throw InvalidArgument("mixed quermassintegral: dimension mismatch");
  DiscreteMeasure s;
  if (i == 0) {
    s = surface_area_measure(k);
  } else if (i == d - 1) {
    s = surface_area_measure(ball.body);
  } else {
    s = mixed_area_measure(std::vector<Slot>{{&k, d - 1 - i}, {&ball.body, i}});
  }
  const double v = mixed_volume_vs_function(s, [&](const Vec& u) { return l.support(u); });
  return bracket(v, i, ball);
}

Estimate quermassintegral(const Polytope& k, int i, const BallApproximant& ball) {
  check_ball(k, ball);
  const int d = k.dim();
  if (i < 0 || i > d) throw InvalidArgument("quermassintegral: index out of range");
  if (i == 0) return bracket(k.volume(), 0, ball);
  if (i == d) return bracket(ball.body.volume(), d, ball);
  if (i == 1) return first_quermassintegral(surface_area_measure(k), ball);
  if (i == d - 1) return last_quermassintegral([&](const Vec& u) { return k.support(u); }, ball);
  return mixed_quermassintegral(k, k, i, ball);
}

double exact_first_quermassintegral(const Polytope& k) {
  double s = 0.0;
  for (const auto& f : k.facets()) s += f.measure;
  return s / k.dim();
}

Estimate first_quermassintegral(const DiscreteMeasure& surface, const BallApproximant& ball) {
  if (surface.dim() != ball.body.dim()) throw InvalidArgument("quermassintegral: dimension mismatch");
  const double v = surface.integrate([&](const Vec& u) { return ball.body.support(u); }) / surface.dim();
  return bracket(v, 1, ball);
}

Estimate last_quermassintegral(const std::function<double(const Vec&)>& support, const BallApproximant& ball) {
  const int d = ball.body.dim();
  double s = 0.0;
  for (const auto& f : ball.body.facets()) s += f.measure * support(f.normal);
  return bracket(s / d, d - 1, ball);
}

}  // namespace cpb
