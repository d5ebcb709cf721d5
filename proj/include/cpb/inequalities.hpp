#pragma once

#include "cpb/ball.hpp"
#include "cpb/check_report.hpp"
#include "cpb/projection_body.hpp"
#include "cpb/properties.hpp"

#include <vector>

namespace cpb {

/// W_i(Q) for a projection body in R^d. i = 0 is the exact volume of the
/// facet sum, i = 1 integrates h_{B_N} against its facets, i = d - 1
/// integrates h_Q against the facets of B_N. Other i hull Q explicitly.
Estimate projection_quermassintegral(const ProjectionBodyResult& q, int i, const BallApproximant& ball);
/// Same, but i must be 0 (no approximant needed).
double projection_volume(const ProjectionBodyResult& q);

/// vol(Pi(K+L))^{1/2m(2m-1)} >= vol(Pi K)^{..} + vol(Pi L)^{..}.
CheckReport check_bm_type(const Polytope& k, const Polytope& l, const PlanarBody& shape, const ComplexSpace& space,
                          double tol = 1e-8, double eq_tol = 1e-6);

/// W_i(Pi(K_1..K_{2m-1}))^k >= prod_{j<=k} W_i(Pi(K_j[k], K_{k+1}, ..., K_{2m-1})).
/// `ball` may be null when i = 0. i = 2m - 1 is reported as degenerate and not evaluated.
CheckReport check_af_type(const std::vector<Polytope>& ks, const PlanarBody& shape, int i, int k,
                          const ComplexSpace& space, const BallApproximant* ball, double tol = 1e-8);

/// W_i(Pi(K[2m-2], L))^{2m-1} >= W_i(Pi K)^{2m-2} W_i(Pi L).
CheckReport check_minkowski_type(const Polytope& k, const Polytope& l, const PlanarBody& shape, int i,
                                 const ComplexSpace& space, const BallApproximant* ball, double tol = 1e-8,
                                 double eq_tol = 1e-6);

/// The classical inequalities in R^n for 0 <= i <= n - 2:
///   bm:   W_i(K+L)^{1/(n-i)} >= W_i(K)^{1/(n-i)} + W_i(L)^{1/(n-i)}
///   bm-tuple: V((K+L)[n-i], Ks)^{1/(n-i)} >= V(K[n-i], Ks)^{..} + V(L[n-i], Ks)^{..}, |Ks| = i
///   minkowski: W_i(K,L)^{n-i} >= W_i(K)^{n-i-1} W_i(L)
CheckReport check_classical(const Polytope& k, const Polytope& l, const std::vector<Polytope>& ks, int i,
                            const BallApproximant* ball, double tol = 1e-8, double eq_tol = 1e-6);

/// Ratios W_{2m-1}(Pi_C K_j) / W_1(K_j) over the sample. W_1 is exact
/// (surface area / d); the numerator uses B_N. The report's single residual
/// is the spread (max - min) / mean and its tolerance is the ball-approximation
/// bound of the ratios.
CheckReport check_w_proportionality(const std::vector<Polytope>& bodies, const PlanarBody& shape,
                                    const ComplexSpace& space, const BallApproximant& ball);

/// Seeded instance runs. `index` selects the ball-slot count i where relevant.
CheckReport bm_suite(const SuiteOptions& opt);
CheckReport af_suite(const SuiteOptions& opt, int i, int k = 2);
CheckReport minkowski_type_suite(const SuiteOptions& opt, int i);
CheckReport classical_suite(const SuiteOptions& opt, int i);
/// {cube, simplex, random hulls} in R^2m; opt.instances random hulls (default 3).
CheckReport proportionality_suite(const SuiteOptions& opt);

}  // namespace cpb
