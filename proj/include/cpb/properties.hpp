#pragma once

#include "cpb/check_report.hpp"
#include "cpb/projection_body.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cpb {

/// Shape parameter with a printable label.
struct Shape {
  PlanarBody body;
  std::string label;
};

/// Builtin shapes: "point", "segment" ([-1,1] x {0}), "square" ([0,1]^2), "disk64".
Shape builtin_shape(const std::string& name);
/// Cycles through segment, random triangle, square and random pentagon.
Shape random_shape(int index, Rng& rng);

/// Directions on which support functions are compared: `count` quasi-random
/// points, +-e_j, the atom directions u of `atoms` and their images Ju.
PointList comparison_directions(const ComplexSpace& space, int count, const std::vector<Atom>& atoms = {});

/// max over dirs of |h_a(w) - h_b(w)| and the matching relative residual.
struct SupportGap {
  double abs = 0.0;
  double rel = 0.0;
};
SupportGap support_gap(const std::function<double(const Vec&)>& a, const std::function<double(const Vec&)>& b,
                       const PointList& dirs);

/// h(Pi K) + h(Pi L) = h(Pi P) + h(Pi (K cap L)) for K = P cap {<u,x> <= c},
/// L = P cap {<u,x> >= c}. A hyperplane that only touches P is allowed.
CheckReport check_valuation(const Polytope& p, const Vec& u, double c, const PlanarBody& shape,
                            const ComplexSpace& space, const PointList& dirs, double tol = 1e-8);

/// h(Pi(gK), w) = h(Pi K, g^{-1} w) for special g.
CheckReport check_contravariance(const Polytope& k, const PlanarBody& shape, const ComplexMatrix& g,
                                 const ComplexSpace& space, const PointList& dirs, double tol = 1e-7);

/// h(Z(gK), w) = |det g|^{(k+1)/m} h(ZK, g^{-1} w) with Z = Pi_C and k = degree.
CheckReport check_gl_covariance(const Polytope& k, const PlanarBody& shape, const ComplexMatrix& g,
                                const ComplexSpace& space, const PointList& dirs, int degree, double tol = 1e-7);

/// V(K_1..K_{2m-1}, Pi_C(L_1..L_{2m-1})) = V(L_1..L_{2m-1}, Pi_conj(C)(K_1..K_{2m-1})).
CheckReport check_symmetry(const std::vector<Slot>& ks, const std::vector<Slot>& ls, const PlanarBody& shape,
                           const ComplexSpace& space, double tol = 1e-6);

/// Pi_{C+t} K = Pi_C K on the sampled directions.
CheckReport check_c_translation(const Polytope& k, const PlanarBody& shape, const Vec2& t, const ComplexSpace& space,
                                const PointList& dirs, double tol = 1e-10);

/// Facet-sum support of Pi_C K against V(K[2m-1], C.w) by polarization.
CheckReport check_two_paths(const Polytope& k, const PlanarBody& shape, const Vec& w, const ComplexSpace& space,
                            double tol = 1e-8);

/// Seed of instance i in a run seeded with `seed` (splitmix64 mix).
std::uint64_t instance_seed(std::uint64_t seed, int i);

/// Seeded randomized runs of the checks above.
struct SuiteOptions {
  int m = 3;
  std::uint64_t seed = 1;
  int instances = 20;
  int dirs = 500;
  std::optional<double> tol;
  std::optional<Shape> shape;  // random per instance if unset
  int points = 0;              // points per random hull; 0 picks 2m + 6
  int ball_n = 32;
  int shape_kinds = 4;         // random shapes cycle through the first shape_kinds kinds
};

CheckReport two_path_suite(const SuiteOptions& opt);
CheckReport valuation_suite(const SuiteOptions& opt);
CheckReport contravariance_suite(const SuiteOptions& opt);
CheckReport gl_covariance_suite(const SuiteOptions& opt);
CheckReport symmetry_suite(const SuiteOptions& opt);
CheckReport c_translation_suite(const SuiteOptions& opt);

/// Random tuple of 2m - 1 bodies built from a few distinct random simplices
/// with multiplicities; `bodies` owns the polytopes the slots point to.
std::vector<Slot> random_tuple(int m, int index, Rng& rng, std::vector<Polytope>& bodies);

}  // namespace cpb
