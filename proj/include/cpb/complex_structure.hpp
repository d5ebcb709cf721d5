#pragma once

#include "cpb/polytope.hpp"
#include "cpb/sampling.hpp"
#include "cpb/types.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace cpb {

using Vec2 = Eigen::Vector2d;
using CMat = Eigen::MatrixXcd;
using cdouble = std::complex<double>;

/// C^m realified as R^{2m} in the interleaved basis (x_1, y_1, ..., x_m, y_m).
class ComplexSpace {
 public:
  explicit ComplexSpace(int m);
  int m() const { return m_; }
  int real_dim() const { return 2 * m_; }
  /// Multiplication by i: e_{2j-1} -> e_{2j}, e_{2j} -> -e_{2j-1}.
  const Mat& J() const { return j_; }
  Vec i_times(const Vec& w) const;
  /// Real vector of complex coordinates z_j = x_j + i y_j.
  Vec from_complex(const Eigen::VectorXcd& z) const;
  Eigen::VectorXcd to_complex(const Vec& x) const;

 private:
  int m_;
  Mat j_;
};

/// Convex polygon in R^2 = C, stored as CCW vertices without collinear or
/// duplicate points. A point or a segment is allowed.
class PlanarBody {
 public:
  PlanarBody() = default;
  static PlanarBody from_points(const std::vector<Vec2>& points);

  const std::vector<Vec2>& vertices() const { return v_; }
  /// 0 for a point, 1 for a segment, 2 for a polygon.
  int dim() const;
  /// h_C(alpha, beta) = max over vertices of alpha*a + beta*b (0 at the origin).
  double support(double alpha, double beta) const;
  double area() const;
  double perimeter() const;

  PlanarBody conjugate() const;
  PlanarBody translated(const Vec2& t) const;
  PlanarBody scaled(double s) const;

  static PlanarBody point(const Vec2& p = Vec2::Zero());
  /// Real segment [-1, 1].
  static PlanarBody real_segment();
  /// [0, 1]^2.
  static PlanarBody unit_square();
  /// Regular n-gon inscribed in the unit circle.
  static PlanarBody disk(int n = 64);

 private:
  std::vector<Vec2> v_;
};

PlanarBody minkowski_sum(const PlanarBody& a, const PlanarBody& b);
bool contains(const PlanarBody& outer, const PlanarBody& inner, double tol = 1e-12);
/// Convex hull of n points drawn uniformly from the unit disk.
PlanarBody random_planar_body(int n, Rng& rng);

/// m x m complex matrix acting on R^{2m} through its realification.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(CMat g);
  static ComplexMatrix identity(int m);
  static ComplexMatrix scalar(int m, cdouble q);

  int m() const { return static_cast<int>(g_.rows()); }
  const CMat& matrix() const { return g_; }
  /// Block (a + ib) -> [[a, -b], [b, a]].
  Mat realify() const;
  cdouble det() const;
  bool is_special(double tol = 1e-9) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix inverse() const;
  /// g^{-*}, the contragredient action on the dual space.
  ComplexMatrix inverse_adjoint() const;
  Vec apply(const Vec& x) const;

 private:
  CMat g_;
};

/// Standard normal real and imaginary parts, divided by an m-th root of the
/// determinant. Ill-conditioned draws are rejected.
ComplexMatrix random_sl(int m, std::uint64_t seed);
ComplexMatrix random_sl(int m, Rng& rng);
ComplexMatrix random_gl(int m, Rng& rng);

/// C.w = {a w + b Jw : (a, b) in C}; lower dimensional.
Polytope complex_segment_body(const PlanarBody& c, const Vec& w, const ComplexSpace& space);

/// f_w(xi) = h_C(<xi, w>, <xi, Jw>) = h(C.w, xi).
std::function<double(const Vec&)> f_w(const PlanarBody& c, const Vec& w, const ComplexSpace& space);

/// x -> R(g) x applied to the vertices.
Polytope act(const ComplexMatrix& g, const Polytope& p);
/// x -> R(g)^{-T} x applied to the vertices (the action of g^{-*}).
Polytope coact(const ComplexMatrix& g, const Polytope& p);

}  // namespace cpb
