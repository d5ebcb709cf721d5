#include "cpb/complex_structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cpb {

ComplexSpace::ComplexSpace(int m) : m_(m) {
  if (m < 1) throw InvalidArgument("complex space: m must be positive");
  j_ = Mat::Zero(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    j_(2 * k + 1, 2 * k) = 1.0;
    j_(2 * k, 2 * k + 1) = -1.0;
  }
}

Vec ComplexSpace::i_times(const Vec& w) const {
  if (w.size() != real_dim()) throw InvalidArgument("complex space: vector has wrong dimension");
  Vec r(w.size());
  for (int k = 0; k < m_; ++k) {
    r(2 * k) = -w(2 * k + 1);
    r(2 * k + 1) = w(2 * k);
  }
  return r;
}

Vec ComplexSpace::from_complex(const Eigen::VectorXcd& z) const {
  if (z.size() != m_) throw InvalidArgument("complex space: vector has wrong dimension");
  Vec x(2 * m_);
  for (int k = 0; k < m_; ++k) {
    x(2 * k) = z(k).real();
    x(2 * k + 1) = z(k).imag();
  }
  return x;
}

Eigen::VectorXcd ComplexSpace::to_complex(const Vec& x) const {
  if (x.size() != real_dim()) throw InvalidArgument("complex space: vector has wrong dimension");
  Eigen::VectorXcd z(m_);
  for (int k = 0; k < m_; ++k) z(k) = cdouble(x(2 * k), x(2 * k + 1));
  return z;
}

// ---------------------------------------------------------------------------

namespace {

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace

PlanarBody PlanarBody::from_points(const std::vector<Vec2>& points) {
  if (points.empty()) throw InvalidArgument("planar body: no points");
  for (const auto& p : points)
    if (!p.allFinite()) throw InvalidArgument("planar body: non-finite coordinates");
  std::vector<Vec2> pts = points;
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  for (const auto& p : pts) scale = std::max(scale, (p - pts.front()).norm());
  scale = std::max(scale, 1e-300);
  const double tol = 1e-12 * scale;

  std::vector<Vec2> uniq;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : uniq) {
      if ((p - q).norm() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) uniq.push_back(p);
  }
  PlanarBody c;
  if (uniq.size() == 1) {
    c.v_ = uniq;
    return c;
  }
  // Andrew's monotone chain, dropping collinear points.
  const double area_tol = 1e-12 * scale * scale;
  std::vector<Vec2> hull(2 * uniq.size());
  size_t k = 0;
  for (size_t i = 0; i < uniq.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], uniq[i]) <= area_tol) --k;
    hull[k++] = uniq[i];
  }
  for (size_t i = uniq.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], uniq[i]) <= area_tol) --k;
    hull[k++] = uniq[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {
    // collinear input: keep the two extreme points
    Vec2 dir = uniq.back() - uniq.front();
    auto proj = [&](const Vec2& p) { return dir.dot(p); };
    auto [lo, hi] = std::minmax_element(uniq.begin(), uniq.end(),
                                        [&](const Vec2& a, const Vec2& b) { return proj(a) < proj(b); });
    c.v_ = {*lo, *hi};
    return c;
  }
  c.v_ = hull;
  return c;
}

int PlanarBody::dim() const {
  if (v_.size() <= 1) return 0;
  if (v_.size() == 2) return 1;
  return 2;
}

double PlanarBody::support(double alpha, double beta) const {
  if (v_.empty()) throw InvalidArgument("planar body: empty");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : v_) best = std::max(best, alpha * p.x() + beta * p.y());
  return best;
}

double PlanarBody::area() const {
  if (dim() < 2) return 0.0;
  double a = 0.0;
  for (size_t i = 0; i < v_.size(); ++i) {
    const Vec2& p = v_[i];
    const Vec2& q = v_[(i + 1) % v_.size()];
    a += p.x() * q.y() - p.y() * q.x();
  }
  return 0.5 * a;
}

double PlanarBody::perimeter() const {
  if (dim() == 0) return 0.0;
  if (dim() == 1) return 2.0 * (v_[1] - v_[0]).norm();
  double s = 0.0;
  for (size_t i = 0; i < v_.size(); ++i) s += (v_[(i + 1) % v_.size()] - v_[i]).norm();
  return s;
}

PlanarBody PlanarBody::conjugate() const {
  std::vector<Vec2> pts;
  for (const auto& p : v_) pts.emplace_back(p.x(), -p.y());
  return from_points(pts);
}

PlanarBody PlanarBody::translated(const Vec2& t) const {
  std::vector<Vec2> pts;
  for (const auto& p : v_) pts.push_back(p + t);
  return from_points(pts);
}

PlanarBody PlanarBody::scaled(double s) const {
  std::vector<Vec2> pts;
  for (const auto& p : v_) pts.push_back(s * p);
  return from_points(pts);
}

PlanarBody PlanarBody::point(const Vec2& p) { return from_points({p}); }

PlanarBody PlanarBody::real_segment() { return from_points({Vec2(-1.0, 0.0), Vec2(1.0, 0.0)}); }

PlanarBody PlanarBody::unit_square() {
  return from_points({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)});
}

PlanarBody PlanarBody::disk(int n) {
  if (n < 3) throw InvalidArgument("disk: need at least 3 vertices");
  std::vector<Vec2> pts;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    pts.emplace_back(std::cos(t), std::sin(t));
  }
  return from_points(pts);
}

PlanarBody minkowski_sum(const PlanarBody& a, const PlanarBody& b) {
  std::vector<Vec2> pts;
  for (const auto& p : a.vertices())
    for (const auto& q : b.vertices()) pts.push_back(p + q);
  return PlanarBody::from_points(pts);
}

bool contains(const PlanarBody& outer, const PlanarBody& inner, double tol) {
  for (int k = 0; k < 64; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 64;
    if (inner.support(std::cos(t), std::sin(t)) > outer.support(std::cos(t), std::sin(t)) + tol) return false;
  }
  return true;
}

PlanarBody random_planar_body(int n, Rng& rng) {
  std::vector<Vec2> pts;
  for (int i = 0; i < n; ++i) pts.push_back(random_in_ball(2, rng));
  return PlanarBody::from_points(pts);
}

// ---------------------------------------------------------------------------

ComplexMatrix::ComplexMatrix(CMat g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols() || g_.rows() < 1) throw InvalidArgument("complex matrix: must be square");
}

ComplexMatrix ComplexMatrix::identity(int m) { return ComplexMatrix(CMat::Identity(m, m)); }

ComplexMatrix ComplexMatrix::scalar(int m, cdouble q) { return ComplexMatrix(q * CMat::Identity(m, m)); }

Mat ComplexMatrix::realify() const {
  const int m = this->m();
  Mat r(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double a = g_(i, j).real(), b = g_(i, j).imag();
      r(2 * i, 2 * j) = a;
      r(2 * i, 2 * j + 1) = -b;
      r(2 * i + 1, 2 * j) = b;
      r(2 * i + 1, 2 * j + 1) = a;
    }
  }
  return r;
}

cdouble ComplexMatrix::det() const { return g_.determinant(); }

bool ComplexMatrix::is_special(double tol) const { return std::abs(det() - cdouble(1.0, 0.0)) <= tol; }

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(g_.adjoint()); }

ComplexMatrix ComplexMatrix::inverse() const {
  Eigen::FullPivLU<CMat> lu(g_);
  if (!lu.isInvertible()) throw InvalidArgument("complex matrix: singular");
  return ComplexMatrix(lu.inverse());
}

ComplexMatrix ComplexMatrix::inverse_adjoint() const { return inverse().adjoint(); }

Vec ComplexMatrix::apply(const Vec& x) const {
  if (x.size() != 2 * m()) throw InvalidArgument("complex matrix: vector has wrong dimension");
  return realify() * x;
}

namespace {

CMat gaussian_cmat(int m, Rng& rng) {
  std::normal_distribution<double> g;
  CMat a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      a(i, j) = cdouble(re, im);
    }
  return a;
}

double condition(const CMat& a) {
  Eigen::JacobiSVD<CMat> svd(a);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) > 0 ? s(0) / s(s.size() - 1) : std::numeric_limits<double>::infinity();
}

}  // namespace

ComplexMatrix random_gl(int m, Rng& rng) {
  if (m < 1) throw InvalidArgument("random_gl: m must be positive");
  while (true) {
    CMat a = gaussian_cmat(m, rng);
    if (condition(a) < 200.0) return ComplexMatrix(a);
  }
}

ComplexMatrix random_sl(int m, Rng& rng) {
  if (m < 2) throw InvalidArgument("random_sl: m must be at least 2");
  while (true) {
    CMat a = gaussian_cmat(m, rng);
    if (condition(a) >= 200.0) continue;
    const cdouble z = std::pow(a.determinant(), 1.0 / m);
    a /= z;
    if (std::abs(a.determinant() - 1.0) <= 1e-12) return ComplexMatrix(a);
  }
}

ComplexMatrix random_sl(int m, std::uint64_t seed) {
  Rng rng(seed);
  return random_sl(m, rng);
}

Polytope complex_segment_body(const PlanarBody& c, const Vec& w, const ComplexSpace& space) {
  const Vec jw = space.i_times(w);
  Mat v(w.size(), c.vertices().size());
  for (size_t k = 0; k < c.vertices().size(); ++k) v.col(k) = c.vertices()[k].x() * w + c.vertices()[k].y() * jw;
  return Polytope::from_points(v, true);
}

std::function<double(const Vec&)> f_w(const PlanarBody& c, const Vec& w, const ComplexSpace& space) {
  const Vec jw = space.i_times(w);
  return [c, w, jw](const Vec& xi) { return c.support(xi.dot(w), xi.dot(jw)); };
}

Polytope act(const ComplexMatrix& g, const Polytope& p) {
  if (p.dim() != 2 * g.m()) throw InvalidArgument("act: dimension mismatch");
  if (std::abs(g.det()) == 0.0) throw InvalidArgument("act: singular matrix");
  return linear_image(p, g.realify());
}

Polytope coact(const ComplexMatrix& g, const Polytope& p) {
  if (p.dim() != 2 * g.m()) throw InvalidArgument("coact: dimension mismatch");
  return linear_image(p, g.inverse_adjoint().realify());
}

}  // namespace cpb
