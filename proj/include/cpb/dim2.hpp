#pragma once

#include "cpb/check_report.hpp"
#include "cpb/complex_structure.hpp"
#include "cpb/polytope.hpp"
#include "cpb/properties.hpp"

#include <vector>

namespace cpb {

/// mu(L) = 2 V(L, M) for planar L: the sum over the edges e of L of
/// |e| h_M(n_e). A segment counts with both of its sides, a point gives 0.
struct DegreeOneValuation {
  PlanarBody reference = PlanarBody::disk(64);
  double operator()(const PlanarBody& l) const;
};

/// det(K, w) = {k_1 w_2 - k_2 w_1 : k in K} in C = R^2. Requires m = 2.
PlanarBody det_body(const Polytope& k, const Vec& w, const ComplexSpace& space);

/// h(ZK, w) = mu(det(K, w)).
double z_valuation(const Polytope& k, const Vec& w, const DegreeOneValuation& mu, const ComplexSpace& space);

/// Least-squares slope of log(values) against log(ts).
double loglog_slope(const std::vector<double>& ts, const std::vector<double>& values);

/// h(ZK) + h(ZL) = h(ZP) + h(Z(K cap L)) for the two pieces of P cut by {<u,x> = c}.
CheckReport check_dim2_valuation(const Polytope& p, const Vec& u, double c, const DegreeOneValuation& mu,
                                 const ComplexSpace& space, const PointList& dirs, double tol = 1e-8);

/// h(Z(gK), w) = h(ZK, g^{-1} w) for g in SL(2,C).
CheckReport check_dim2_contravariance(const Polytope& k, const ComplexMatrix& g, const DegreeOneValuation& mu,
                                      const ComplexSpace& space, const PointList& dirs, double tol = 1e-7);

/// Log-log slopes of t -> h(Z(tK), w) and t -> h(Pi_C(tK), w) over t in
/// {1, 2, 4, 8}, worst case over dirs. The first must be 1 and the second 3.
CheckReport check_dim2_homogeneity(const Polytope& k, const PlanarBody& shape, const DegreeOneValuation& mu,
                                   const ComplexSpace& space, const PointList& dirs, double tol = 1e-6);

/// Seeded runs at m = 2 (opt.m is ignored).
CheckReport dim2_valuation_suite(const SuiteOptions& opt);
CheckReport dim2_contravariance_suite(const SuiteOptions& opt);
CheckReport dim2_homogeneity_suite(const SuiteOptions& opt);
/// The three suites merged into one degree-gap report.
CheckReport dim2_suite(const SuiteOptions& opt);

}  // namespace cpb
