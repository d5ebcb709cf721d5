#pragma once

#include "cpb/measure.hpp"
#include "cpb/polytope.hpp"

#include <functional>

namespace cpb {

/// Origin-symmetric polytope B_N inscribed in the unit ball with
/// B_N ⊂ B ⊂ (1 + delta) B_N.
struct BallApproximant {
  Polytope body;
  double delta = 0.0;
  int N = 0;
};

/// Hull of ±e_j, ±(e_j ± e_k)/sqrt(2) and 2dN quasi-random sphere points with
/// their negatives. delta = 1/r - 1 where r is the smallest facet offset, so
/// the bound is exact for the polytope that was built.
BallApproximant make_ball_approximant(int d, int N = 32);

/// A quantity known to lie in [lower, upper]; `value` is the B_N evaluation.
struct Estimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double radius() const { return 0.5 * (upper - lower); }
};

/// W_i(K) = V(K[d-i], B[i]) for 0 <= i <= d, bracketed using monotonicity
/// of mixed volumes: V(K[d-i], B_N[i]) <= W_i <= (1+delta)^i V(K[d-i], B_N[i]).
Estimate quermassintegral(const Polytope& k, int i, const BallApproximant& ball);

/// W_i(K, L) = V(K[d-1-i], B[i], L) for 0 <= i <= d-1.
Estimate mixed_quermassintegral(const Polytope& k, const Polytope& l, int i, const BallApproximant& ball);

/// W_1 with the true ball: h_B = 1 on unit normals, so W_1(K) = S(K) / d exactly.
double exact_first_quermassintegral(const Polytope& k);

/// W_1 of a body given by its surface area measure: (1/d) sum a_j h_{B_N}(u_j).
Estimate first_quermassintegral(const DiscreteMeasure& surface, const BallApproximant& ball);

/// W_{d-1} of a body given by its support function: (1/d) sum over the facets
/// of B_N of A_j h(n_j).
Estimate last_quermassintegral(const std::function<double(const Vec&)>& support, const BallApproximant& ball);

/// Bracket a B_N evaluation with i ball slots.
Estimate bracket(double value, int i, const BallApproximant& ball);

}  // namespace cpb
