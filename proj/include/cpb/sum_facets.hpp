#pragma once

#include "cpb/polytope.hpp"
#include "cpb/types.hpp"

#include <vector>

namespace cpb {

/// A convex set of dimension at most two in R^k: a segment or a polygon given
/// in an orthonormal frame, plus a translation.
struct FlatPiece {
  int dim = 0;
  Vec offset;                      // translation in R^k
  Mat frame;                       // k x dim, orthonormal columns
  std::vector<Eigen::Vector2d> poly;  // dim 2: CCW vertices in frame coordinates
  double lo = 0.0, hi = 0.0;       // dim 1: interval along frame.col(0)

  /// Vertices in R^k as columns.
  Mat points() const;
  double support(const Vec& n) const;
  double measure() const;  // length or area
};

/// Segment [a, b] in R^k.
FlatPiece make_segment_piece(const Vec& a, const Vec& b);
/// Polygon offset + frame * v for CCW v.
FlatPiece make_polygon_piece(const Vec& offset, const Mat& frame, const std::vector<Eigen::Vector2d>& ccw);

struct SumFacet {
  Vec normal;
  double offset = 0.0;
  double measure = 0.0;
};

/// Minkowski sum of segments and polygons in R^k, handled without forming
/// the vertex set. Facets are enumerated from combinations of summand faces
/// whose directions span a hyperplane; facet measures recurse into the
/// hyperplane. Pieces lying in a common plane or line are merged first.
class FlatSum {
 public:
  FlatSum(int k, const std::vector<FlatPiece>& pieces);

  int dim() const { return k_; }
  /// Dimension of the linear span of all summand directions.
  int span_dim() const { return span_dim_; }
  const std::vector<FlatPiece>& pieces() const { return pieces_; }
  const Vec& translation() const { return shift_; }

  double support(const Vec& n) const;
  /// Facets of a full-dimensional sum; empty otherwise.
  std::vector<SumFacet> facets() const;
  /// k-volume (0 if not full dimensional).
  double volume() const;
  /// Explicit vertex hull, re-hulling after every `batch` summands.
  Polytope materialize(int batch = 8) const;

 private:
  int k_;
  std::vector<FlatPiece> pieces_;
  Vec shift_;
  int span_dim_ = 0;
  double scale_ = 1.0;
};

}  // namespace cpb
