#pragma once

#include "cpb/hull.hpp"
#include "cpb/types.hpp"

#include <utility>
#include <vector>

namespace cpb {

/// Convex polytope in R^d given by its extreme points, with facet data
/// derived by the hull routine. Lower-dimensional polytopes keep their
/// affine hull; their volume is 0 and, in codimension one, they carry the
/// two facets +u and -u with the relative volume as measure.
class Polytope {
 public:
  Polytope() = default;
  explicit Polytope(HullResult hull) : h_(std::move(hull)) {}

  static Polytope from_points(const Mat& points, bool allow_lower_dim = false);
  static Polytope from_points(const PointList& points, bool allow_lower_dim = false);

  int dim() const { return h_.ambient_dim; }
  int affine_dim() const { return h_.affine_dim; }
  bool full_dimensional() const { return h_.affine_dim == h_.ambient_dim; }

  /// Extreme points as columns.
  const Mat& vertices() const { return h_.vertices; }
  int num_vertices() const { return static_cast<int>(h_.vertices.cols()); }
  PointList vertex_list() const;
  const std::vector<HullFacet>& facets() const { return h_.facets; }
  double volume() const { return h_.volume; }
  double relative_volume() const { return h_.relative_volume; }
  double scale() const { return h_.scale; }
  const Vec& affine_origin() const { return h_.affine_origin; }
  const Mat& affine_basis() const { return h_.affine_basis; }
  Vec vertex_centroid() const { return h_.vertices.rowwise().mean(); }

  double support(const Vec& dir) const;
  /// Indices of vertices within tol (relative) of the maximum.
  std::vector<int> argsupport(const Vec& dir, double rel_tol = kTol.rel) const;

 private:
  HullResult h_;
};

Polytope convex_hull(const Mat& points, bool allow_lower_dim = false);
Polytope convex_hull(const PointList& points, bool allow_lower_dim = false);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope minkowski_sum(const std::vector<Polytope>& bodies);
/// t1 * P1 + ... + tk * Pk.
Polytope weighted_sum(const std::vector<const Polytope*>& bodies, const std::vector<double>& weights);

double volume(const Polytope& p);
double support(const Polytope& p, const Vec& dir);

Polytope translate(const Polytope& p, const Vec& x);
Polytope scale(const Polytope& p, double t);
/// Image under x -> g x (+ shift). Singular g gives a lower-dimensional result.
Polytope linear_image(const Polytope& p, const Mat& g);
Polytope affine_image(const Polytope& p, const Mat& g, const Vec& shift);

/// Pieces of P on both sides of {<u,x> = c}: first = {<u,x> <= c}, second = {>= c}.
/// A hyperplane that supports P yields a lower-dimensional piece on that side.
/// Throws InvalidArgument if the hyperplane misses P.
std::pair<Polytope, Polytope> split(const Polytope& p, const Vec& u, double c);
/// P intersected with the hyperplane, always lower dimensional.
Polytope section(const Polytope& p, const Vec& u, double c);

/// Volume by recursion over facets: vol = (1/d) sum h_i A_i with each A_i
/// computed in an orthonormal frame of its facet hyperplane. Independent of
/// the area-vector bookkeeping of the hull routine.
double volume_by_facet_recursion(const Mat& points);

// Standard bodies.
Polytope cube(int d, double lo = 0.0, double hi = 1.0);
Polytope box(const Vec& lo, const Vec& hi);
Polytope standard_simplex(int d);
Polytope cross_polytope(int d);
Polytope segment(const Vec& a, const Vec& b);

}  // namespace cpb
