#pragma once

#include "cpb/polytope.hpp"
#include "cpb/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cpb {

using Rng = std::mt19937_64;

/// Radical inverse of `index` in the given base (Halton coordinate).
double radical_inverse(std::uint64_t index, int base);

/// `count` quasi-random unit vectors: Halton points pushed through Box-Muller
/// and normalized. Deterministic.
PointList quasi_random_sphere(int d, int count, std::uint64_t start = 1);

/// Quasi-random directions plus +-e_j plus any extra directions (normalized).
PointList test_directions(int d, int count, const PointList& extra = {});

Vec random_unit_vector(int d, Rng& rng);
Vec random_gaussian(int d, Rng& rng);
Vec random_in_ball(int d, Rng& rng);

/// Convex hull of d+1 Gaussian points, resampled until well conditioned.
Polytope random_simplex(int d, Rng& rng);
/// Convex hull of `n` uniform points in the unit ball.
Polytope random_hull(int d, int n, Rng& rng);

}  // namespace cpb
