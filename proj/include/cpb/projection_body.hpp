#pragma once

#include "cpb/complex_structure.hpp"
#include "cpb/measure.hpp"
#include "cpb/mixed_volume.hpp"
#include "cpb/sum_facets.hpp"

#include <vector>

namespace cpb {

/// Pi_C of a body or a tuple, kept as the weighted sum
/// (1/2m) sum_i a_i (conj(C) . u_i) over the atoms (u_i, a_i) of its
/// (mixed) surface area measure. The support function is evaluated from the
/// trace; volumes and facets go through FlatSum; `body()` builds the
/// explicit vertex hull on request.
class ProjectionBodyResult {
 public:
  ProjectionBodyResult(const ComplexSpace& space, const PlanarBody& c, std::vector<Atom> trace);

  int m() const { return space_.m(); }
  int dim() const { return space_.real_dim(); }
  const ComplexSpace& space() const { return space_; }
  const PlanarBody& shape() const { return c_; }
  const std::vector<Atom>& trace() const { return trace_; }

  /// (1/2m) sum_i a_i h_C(<u_i, w>, <u_i, Jw>).
  double support(const Vec& w) const;
  /// The planar summands a_i/(2m) (conj(C) . u_i) in R^{2m}.
  std::vector<FlatPiece> summands() const;
  FlatSum as_sum() const;
  double volume() const;
  std::vector<SumFacet> facets() const;
  Polytope body(int batch = 8) const;

 private:
  ComplexSpace space_;
  PlanarBody c_;
  std::vector<Atom> trace_;
};

ProjectionBodyResult projection_body(const Polytope& k, const PlanarBody& c, const ComplexSpace& space);
/// Requires 2m - 1 bodies (counted with multiplicity).
ProjectionBodyResult mixed_projection_body(const std::vector<Slot>& slots, const PlanarBody& c,
                                           const ComplexSpace& space);
ProjectionBodyResult mixed_projection_body(const std::vector<Polytope>& bodies, const PlanarBody& c,
                                           const ComplexSpace& space);
/// Pi_C of the body with surface area measure `s` (d = 2m).
ProjectionBodyResult projection_body_from_measure(const DiscreteMeasure& s, const PlanarBody& c,
                                                  const ComplexSpace& space);

/// V(K[2m-1], C.w), resp. V(K_1, ..., K_{2m-1}, C.w), by polarization.
double support_via_mixed_volume(const Polytope& k, const PlanarBody& c, const Vec& w, const ComplexSpace& space);
double support_via_mixed_volume(const std::vector<Slot>& slots, const PlanarBody& c, const Vec& w,
                                const ComplexSpace& space);

}  // namespace cpb
