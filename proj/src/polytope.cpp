#include "cpb/polytope.hpp"

#include <algorithm>
#include <cmath>

namespace cpb {

namespace {

Mat to_matrix(const PointList& points) {
  if (points.empty()) throw InvalidArgument("empty point list");
  const auto d = points.front().size();
  Mat m(d, points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw InvalidArgument("points of mixed dimension");
    m.col(i) = points[i];
  }
  return m;
}

void require_same_dim(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(p.dim()) + " vs " +
                          std::to_string(q.dim()));
  }
}

}  // namespace

Polytope Polytope::from_points(const Mat& points, bool allow_lower_dim) {
  return Polytope(compute_hull(points, HullOptions{allow_lower_dim}));
}

Polytope Polytope::from_points(const PointList& points, bool allow_lower_dim) {
  return from_points(to_matrix(points), allow_lower_dim);
}

PointList Polytope::vertex_list() const {
  PointList out;
  out.reserve(h_.vertices.cols());
  for (int i = 0; i < h_.vertices.cols(); ++i) out.push_back(h_.vertices.col(i));
  return out;
}

double Polytope::support(const Vec& dir) const {
  if (dir.size() != dim()) throw InvalidArgument("support: direction has wrong dimension");
  if (dir.squaredNorm() == 0.0) throw InvalidArgument("support: zero direction");
  return (h_.vertices.transpose() * dir).maxCoeff();
}

std::vector<int> Polytope::argsupport(const Vec& dir, double rel_tol) const {
  if (dir.size() != dim()) throw InvalidArgument("argsupport: direction has wrong dimension");
  const double nd = dir.norm();
  if (nd == 0.0) throw InvalidArgument("argsupport: zero direction");
  const Vec vals = h_.vertices.transpose() * dir;
  const double top = vals.maxCoeff();
  const double tol = rel_tol * nd * std::max(1.0, scale());
  std::vector<int> out;
  for (int i = 0; i < vals.size(); ++i)
    if (vals(i) >= top - tol) out.push_back(i);
  return out;
}

Polytope convex_hull(const Mat& points, bool allow_lower_dim) {
  return Polytope::from_points(points, allow_lower_dim);
}

Polytope convex_hull(const PointList& points, bool allow_lower_dim) {
  return Polytope::from_points(points, allow_lower_dim);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  require_same_dim(p, q);
  const Mat& a = p.vertices();
  const Mat& b = q.vertices();
  Mat sums(p.dim(), a.cols() * b.cols());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) sums.col(i * b.cols() + j) = a.col(i) + b.col(j);
  return Polytope::from_points(sums, true);
}

Polytope minkowski_sum(const std::vector<Polytope>& bodies) {
  if (bodies.empty()) throw InvalidArgument("minkowski_sum: no summands");
  Polytope acc = bodies.front();
  for (size_t i = 1; i < bodies.size(); ++i) acc = minkowski_sum(acc, bodies[i]);
  return acc;
}

Polytope weighted_sum(const std::vector<const Polytope*>& bodies, const std::vector<double>& weights) {
  if (bodies.empty() || bodies.size() != weights.size())
    throw InvalidArgument("weighted_sum: bodies and weights must be nonempty and of equal length");
  Polytope acc = scale(*bodies.front(), weights.front());
  for (size_t i = 1; i < bodies.size(); ++i) acc = minkowski_sum(acc, scale(*bodies[i], weights[i]));
  return acc;
}

double volume(const Polytope& p) { return p.volume(); }

double support(const Polytope& p, const Vec& dir) { return p.support(dir); }

Polytope translate(const Polytope& p, const Vec& x) {
  if (x.size() != p.dim()) throw InvalidArgument("translate: dimension mismatch");
  Mat v = p.vertices().colwise() + x;
  return Polytope::from_points(v, true);
}

Polytope scale(const Polytope& p, double t) {
  Mat v = t * p.vertices();
  return Polytope::from_points(v, true);
}

Polytope linear_image(const Polytope& p, const Mat& g) {
  if (g.cols() != p.dim()) throw InvalidArgument("linear_image: matrix has wrong number of columns");
  Mat v = g * p.vertices();
  return Polytope::from_points(v, true);
}

Polytope affine_image(const Polytope& p, const Mat& g, const Vec& shift) {
  if (g.cols() != p.dim() || shift.size() != g.rows())
    throw InvalidArgument("affine_image: dimension mismatch");
  Mat v = (g * p.vertices()).colwise() + shift;
  return Polytope::from_points(v, true);
}

namespace {

struct CutPoints {
  std::vector<Vec> below, above, on;
};

CutPoints cut_points(const Polytope& p, const Vec& u, double c) {
  if (u.size() != p.dim()) throw InvalidArgument("split: normal has wrong dimension");
  const double nu = u.norm();
  if (nu == 0.0) throw InvalidArgument("split: zero normal");
  const Mat& v = p.vertices();
  const Vec s = v.transpose() * u;
  const double tol = kTol.rel * nu * std::max(1.0, p.scale());
  if (s.minCoeff() > c + tol || s.maxCoeff() < c - tol)
    throw InvalidArgument("split: hyperplane does not meet the polytope");
  CutPoints cp;
  for (int i = 0; i < v.cols(); ++i) {
    if (std::abs(s(i) - c) <= tol) {
      cp.on.push_back(v.col(i));
    } else if (s(i) < c) {
      cp.below.push_back(v.col(i));
    } else {
      cp.above.push_back(v.col(i));
    }
  }
  for (int i = 0; i < v.cols(); ++i) {
    if (s(i) >= c - tol) continue;
    for (int j = 0; j < v.cols(); ++j) {
      if (s(j) <= c + tol) continue;
      const double t = (c - s(i)) / (s(j) - s(i));
      cp.on.push_back(v.col(i) + t * (v.col(j) - v.col(i)));
    }
  }
  return cp;
}

}  // namespace

std::pair<Polytope, Polytope> split(const Polytope& p, const Vec& u, double c) {
  CutPoints cp = cut_points(p, u, c);
  PointList lo = cp.on, hi = cp.on;
  lo.insert(lo.end(), cp.below.begin(), cp.below.end());
  hi.insert(hi.end(), cp.above.begin(), cp.above.end());
  return {Polytope::from_points(lo, true), Polytope::from_points(hi, true)};
}

Polytope section(const Polytope& p, const Vec& u, double c) {
  CutPoints cp = cut_points(p, u, c);
  return Polytope::from_points(cp.on, true);
}

double volume_by_facet_recursion(const Mat& points) {
  const int k = static_cast<int>(points.rows());
  if (k == 1) return points.maxCoeff() - points.minCoeff();
  HullResult h = compute_hull(points, HullOptions{true});
  if (h.affine_dim < k) return 0.0;
  const Vec c = h.vertices.rowwise().mean();
  double vol = 0.0;
  for (const auto& f : h.facets) {
    Eigen::HouseholderQR<Mat> qr(Mat(f.normal));
    Mat q = qr.householderQ();
    Mat frame = q.rightCols(k - 1);
    Mat local(k - 1, f.vertices.size());
    for (size_t i = 0; i < f.vertices.size(); ++i)
      local.col(i) = frame.transpose() * h.vertices.col(f.vertices[i]);
    const double area = volume_by_facet_recursion(local);
    vol += (f.offset - f.normal.dot(c)) * area;
  }
  return vol / k;
}

Polytope cube(int d, double lo, double hi) {
  return box(Vec::Constant(d, lo), Vec::Constant(d, hi));
}

Polytope box(const Vec& lo, const Vec& hi) {
  const int d = static_cast<int>(lo.size());
  if (hi.size() != d) throw InvalidArgument("box: corner dimension mismatch");
  Mat v(d, 1 << d);
  for (int mask = 0; mask < (1 << d); ++mask)
    for (int j = 0; j < d; ++j) v(j, mask) = (mask >> j & 1) ? hi(j) : lo(j);
  return Polytope::from_points(v, true);
}

Polytope standard_simplex(int d) {
  Mat v = Mat::Zero(d, d + 1);
  for (int j = 0; j < d; ++j) v(j, j + 1) = 1.0;
  return Polytope::from_points(v);
}

Polytope cross_polytope(int d) {
  Mat v = Mat::Zero(d, 2 * d);
  for (int j = 0; j < d; ++j) {
    v(j, 2 * j) = 1.0;
    v(j, 2 * j + 1) = -1.0;
  }
  return Polytope::from_points(v);
}

Polytope segment(const Vec& a, const Vec& b) {
  Mat v(a.size(), 2);
  v.col(0) = a;
  v.col(1) = b;
  return Polytope::from_points(v, true);
}

}  // namespace cpb
