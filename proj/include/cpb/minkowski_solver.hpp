#pragma once

#include "cpb/check_report.hpp"
#include "cpb/complex_structure.hpp"
#include "cpb/measure.hpp"
#include "cpb/polytope.hpp"
#include "cpb/properties.hpp"

#include <vector>

namespace cpb {

/// Adds 2d * spread atoms of weight eps at +-v for the columns v of `spread`
/// orthonormal frames (the first is the standard basis), then corrects the
/// weights by a weighted least-squares step so that sum a_i u_i = 0.
/// eps <= 0 picks 1e-3 of the total mass (1e-3 for the zero measure).
/// Throws NumericalError if the correction would make a weight non-positive.
DiscreteMeasure balance_measure(const DiscreteMeasure& rho, int spread = 1, double eps = 0.0);

struct MinkowskiOptions {
  int max_iterations = 500;
  double tol = 1e-6;  // max |A_i - a_i| / max a_i
};

struct MinkowskiSolution {
  Polytope body;         // vertex centroid at the origin
  Vec h;                 // support numbers of `body` in the atom directions
  Vec facet_measures;    // A_i, zero for atoms without a facet
  double residual = 0.0;
  int iterations = 0;
  std::vector<double> objective;  // per accepted iteration
};

/// Polytope whose surface area measure is `rho`. Minimizes
/// sum a_i h_i - log vol(P(h)) over support numbers h by projected Newton and
/// rescales the minimizer. Throws InvalidArgument for a measure that is not
/// centered or whose directions do not span, SolverError if the residual is
/// not reached.
MinkowskiSolution solve_minkowski_detailed(const DiscreteMeasure& rho, const MinkowskiOptions& opt = {});
Polytope solve_minkowski(const DiscreteMeasure& rho, const MinkowskiOptions& opt = {});

/// Atom-by-atom comparison of surface_area_measure(p) with rho: facets are
/// matched to atoms within `angle_tol`; unmatched facets or atoms count with
/// their full weight. Relative to the largest atom weight.
double round_trip_residual(const DiscreteMeasure& rho, const Polytope& p, double angle_tol = 1e-8);

/// Random centered measure in R^d that spans: surface measure of a random
/// simplex or hull, or random atoms balanced by the weight correction.
DiscreteMeasure random_admissible_measure(int d, int index, Rng& rng);

/// Solves random admissible measures in R^{2m} and compares the facet
/// measures of the solutions with the input.
CheckReport round_trip_suite(const SuiteOptions& opt);

/// Three atoms w_1 = (conj z1, conj z2, 0..), w_2 = (conj z2, conj z1, 0..),
/// w_3 = (conj z3, conj z3, 0..) with z3 = -z1 - z2, balanced with shrinking
/// eps_l; for each l the body K_l with that surface measure is solved and
/// h(Pi_C K_l, u) is compared with (1/2m) sum_j h_C(<w_j, u>, <w_j, Ju>).
/// Row l carries the sup-residual over the test directions and passes when
/// it is below the residual of row l - 1.
CheckReport step2_limit_experiment(cdouble z1, cdouble z2, const PlanarBody& c, int l_max, const ComplexSpace& space,
                                   int dirs = 200);

}  // namespace cpb
