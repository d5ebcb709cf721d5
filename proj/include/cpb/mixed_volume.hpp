#pragma once

#include "cpb/measure.hpp"
#include "cpb/polytope.hpp"

#include <functional>
#include <vector>

namespace cpb {

/// A body together with the number of slots it fills.
struct Slot {
  const Polytope* body;
  int count;
};

struct MixedVolumeResult {
  double value = 0.0;
  bool clamped = false;     // tiny negative cancellation noise was set to 0
  int hulls = 0;            // number of subset-sum volumes evaluated
};

/// Groups equal bodies (identical vertex matrices) into slots.
std::vector<Slot> group_slots(const std::vector<Polytope>& bodies);

/// V(K_1, ..., K_d) by inclusion-exclusion over subset sums. Repeated bodies
/// are grouped, so only prod(n_j + 1) - 1 sums are hulled.
MixedVolumeResult mixed_volume_detailed(const std::vector<Slot>& slots);
double mixed_volume(const std::vector<Polytope>& bodies);
double mixed_volume(const std::vector<Slot>& slots);

/// Mixed area measure S(K_1, ..., K_{d-1}, .) by polarization of surface area
/// measures of subset sums.
DiscreteMeasure mixed_area_measure(const std::vector<Slot>& slots);
DiscreteMeasure mixed_area_measure(const std::vector<Polytope>& bodies);

/// (1/d) sum a_i f(u_i) over the mixed area measure of the bodies.
double mixed_volume_vs_function(const std::vector<Polytope>& bodies,
                                const std::function<double(const Vec&)>& f);
double mixed_volume_vs_function(const DiscreteMeasure& mixed_area,
                                const std::function<double(const Vec&)>& f);

}  // namespace cpb
