#pragma once

#include "cpb/types.hpp"

#include <vector>

namespace cpb {

struct HullOptions {
  /// Accept inputs whose affine hull is a proper subspace.
  bool allow_lower_dim = false;
};

struct HullFacet {
  Vec normal;                 // outward unit normal
  double offset = 0.0;        // <normal, x> = offset on the facet
  double measure = 0.0;       // (d-1)-volume
  std::vector<int> vertices;  // indices into HullResult::vertices columns
};

/// Raw output of the hull routine. Points are stored as columns.
struct HullResult {
  int ambient_dim = 0;
  int affine_dim = 0;
  Mat vertices;                 // d x n, extreme points only
  std::vector<HullFacet> facets;
  double volume = 0.0;          // d-volume, zero when lower dimensional
  double relative_volume = 0.0; // affine_dim-volume inside the affine hull
  Vec affine_origin;            // a point of the affine hull
  Mat affine_basis;             // d x affine_dim, orthonormal columns
  double scale = 1.0;           // coordinate magnitude used for tolerances
};

/// Gift wrapping over facets inside the affine hull of the input. Points
/// within the tolerance of a supporting hyperplane belong to one facet;
/// facet measures come from the hull of each facet, so the closedness sum
/// vanishes up to rounding. Retries with coarser tolerances if a sliver
/// stalls the wrapping.
HullResult compute_hull(const Mat& points, const HullOptions& options = {});

namespace detail {

/// Generalized cross product of the rows of `edges` ((k-1) x k):
/// <y, result> = det([y; edges]).
Vec generalized_cross(const Mat& edges);

/// Orthonormal basis of span(columns); singular values must exceed both
/// rel_tol times the largest one and abs_tol.
Mat orthonormal_span(const Mat& columns, double rel_tol, double abs_tol = 0.0);

}  // namespace detail

}  // namespace cpb
