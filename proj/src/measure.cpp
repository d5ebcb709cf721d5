#include "cpb/measure.hpp"

#include <algorithm>
#include <cmath>

namespace cpb {

DiscreteMeasure::DiscreteMeasure(int dim, std::vector<Atom> atoms, bool centered)
    : dim_(dim), centered_(centered) {
  if (dim < 1) throw InvalidArgument("measure: dimension must be positive");
  atoms_.reserve(atoms.size());
  for (auto& at : atoms) {
    if (at.u.size() != dim) throw InvalidArgument("measure: atom direction has wrong dimension");
    if (!std::isfinite(at.a) || !at.u.allFinite()) throw InvalidArgument("measure: non-finite atom");
    if (at.a < 0.0) throw InvalidArgument("measure: negative weight");
    if (at.a == 0.0) continue;
    const double nu = at.u.norm();
    if (nu == 0.0) throw InvalidArgument("measure: zero direction");
    at.u /= nu;
    atoms_.push_back(std::move(at));
  }
}

double DiscreteMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& at : atoms_) s += at.a;
  return s;
}

Vec DiscreteMeasure::first_moment() const {
  Vec m = Vec::Zero(dim_);
  for (const auto& at : atoms_) m += at.a * at.u;
  return m;
}

bool DiscreteMeasure::is_centered(double rel_tol) const {
  return first_moment().norm() <= rel_tol * std::max(1.0, total_mass());
}

double DiscreteMeasure::integrate(const std::function<double(const Vec&)>& f) const {
  double s = 0.0;
  for (const auto& at : atoms_) s += at.a * f(at.u);
  return s;
}

DiscreteMeasure DiscreteMeasure::scaled(double t) const {
  if (t < 0.0) throw InvalidArgument("measure: negative scale factor");
  std::vector<Atom> atoms = atoms_;
  for (auto& at : atoms) at.a *= t;
  return DiscreteMeasure(dim_, std::move(atoms), centered_);
}

std::vector<Atom> merge_atoms(std::vector<Atom> atoms, double angle_tol) {
  if (atoms.empty()) return atoms;
  for (auto& at : atoms) at.u.normalize();
  std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.u(0) < y.u(0); });
  double abs_mass = 0.0;
  for (const auto& at : atoms) abs_mass += std::abs(at.a);

  std::vector<Atom> merged;
  std::vector<char> used(atoms.size(), 0);
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (used[i]) continue;
    Atom acc = atoms[i];
    for (size_t j = i + 1; j < atoms.size() && atoms[j].u(0) - atoms[i].u(0) <= angle_tol; ++j) {
      if (used[j]) continue;
      if ((atoms[j].u - atoms[i].u).norm() <= angle_tol) {
        acc.a += atoms[j].a;
        used[j] = 1;
      }
    }
    merged.push_back(std::move(acc));
  }

  std::vector<Atom> out;
  const double neg_tol = kTol.negativity * abs_mass;
  for (auto& at : merged) {
    if (at.a < -neg_tol) {
      throw NumericalError("merge_atoms: merged weight " + std::to_string(at.a) +
                           " is negative beyond cancellation noise");
    }
    if (at.a <= 0.0) continue;
    out.push_back(std::move(at));
  }
  double mass = 0.0;
  for (const auto& at : out) mass += at.a;
  const double drop = kTol.atom_drop * std::max(mass, neg_tol);
  out.erase(std::remove_if(out.begin(), out.end(), [&](const Atom& at) { return at.a <= drop; }), out.end());
  return out;
}

DiscreteMeasure surface_area_measure(const Polytope& p) {
  std::vector<Atom> atoms;
  atoms.reserve(p.facets().size());
  for (const auto& f : p.facets()) atoms.push_back({f.normal, f.measure});
  return DiscreteMeasure(p.dim(), std::move(atoms), true);
}

}  // namespace cpb
