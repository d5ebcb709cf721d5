#pragma once

#include "cpb/polytope.hpp"
#include "cpb/types.hpp"

#include <functional>
#include <vector>

namespace cpb {

struct Atom {
  Vec u;
  double a = 0.0;
};

/// Finite atomic measure on the unit sphere S^{d-1}.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  /// Normalizes directions, drops zero weights, rejects negative weights.
  DiscreteMeasure(int dim, std::vector<Atom> atoms, bool centered = false);

  int dim() const { return dim_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  bool centered() const { return centered_; }

  double total_mass() const;
  /// sum a_i u_i
  Vec first_moment() const;
  bool is_centered(double rel_tol = kTol.rel) const;
  double integrate(const std::function<double(const Vec&)>& f) const;

  DiscreteMeasure scaled(double t) const;

 private:
  int dim_ = 0;
  std::vector<Atom> atoms_;
  bool centered_ = false;
};

/// Merge atoms whose directions agree within `angle_tol`; weights are summed
/// with sign. Merged weights that are negative by at most kTol.negativity of
/// the total absolute mass are dropped, larger negatives raise NumericalError.
/// Weights below kTol.atom_drop of the total mass are dropped.
std::vector<Atom> merge_atoms(std::vector<Atom> atoms, double angle_tol = kTol.merge_angle);

/// One atom (u_F, A_F) per facet. Codimension-one bodies give the two atoms
/// +u and -u; bodies of higher codimension give the zero measure.
DiscreteMeasure surface_area_measure(const Polytope& p);

}  // namespace cpb
