#include "cpb/mixed_volume.hpp"

#include <cmath>

namespace cpb {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

bool same_body(const Polytope& a, const Polytope& b) {
  return a.dim() == b.dim() && a.vertices().cols() == b.vertices().cols() && a.vertices() == b.vertices();
}

int check_slots(const std::vector<Slot>& slots, int expected_total_offset, const char* what) {
  if (slots.empty()) throw InvalidArgument(std::string(what) + ": no bodies");
  const int d = slots.front().body->dim();
  int total = 0;
  for (const auto& s : slots) {
    if (s.body->dim() != d) throw InvalidArgument(std::string(what) + ": dimension mismatch");
    if (s.count < 0) throw InvalidArgument(std::string(what) + ": negative multiplicity");
    total += s.count;
  }
  if (total != d + expected_total_offset) {
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(d + expected_total_offset) +
                          " bodies in R^" + std::to_string(d) + ", got " + std::to_string(total));
  }
  return d;
}

// Calls fn(counts, coefficient) for every nonzero count vector c <= n, where
// coefficient = prod binom(n_j, c_j) * (-1)^(total - |c|).
template <typename Fn>
void for_each_subset_sum(const std::vector<Slot>& slots, int total, Fn fn) {
  const size_t r = slots.size();
  std::vector<int> c(r, 0);
  while (true) {
    size_t j = 0;
    while (j < r && c[j] == slots[j].count) {
      c[j] = 0;
      ++j;
    }
    if (j == r) break;
    ++c[j];
    int size = 0;
    double coef = 1.0;
    for (size_t i = 0; i < r; ++i) {
      size += c[i];
      coef *= binom(slots[i].count, c[i]);
    }
    if ((total - size) % 2 != 0) coef = -coef;
    fn(c, coef);
  }
}

// c_1 K_1 + ... + c_r K_r with each summand centred at its vertex centroid.
Polytope subset_sum(const std::vector<Slot>& slots, const std::vector<int>& c) {
  Polytope acc;
  bool first = true;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (c[i] == 0) continue;
    const Polytope& b = *slots[i].body;
    Mat v = (b.vertices().colwise() - b.vertex_centroid()) * static_cast<double>(c[i]);
    Polytope term = Polytope::from_points(v, true);
    acc = first ? term : minkowski_sum(acc, term);
    first = false;
  }
  return acc;
}

}  // namespace

std::vector<Slot> group_slots(const std::vector<Polytope>& bodies) {
  std::vector<Slot> slots;
  for (const auto& b : bodies) {
    bool found = false;
    for (auto& s : slots) {
      if (same_body(*s.body, b)) {
        ++s.count;
        found = true;
        break;
      }
    }
    if (!found) slots.push_back({&b, 1});
  }
  return slots;
}

MixedVolumeResult mixed_volume_detailed(const std::vector<Slot>& slots) {
  const int d = check_slots(slots, 0, "mixed_volume");
  MixedVolumeResult res;
  double sum = 0.0, mag = 0.0;
  for_each_subset_sum(slots, d, [&](const std::vector<int>& c, double coef) {
    const double v = subset_sum(slots, c).volume();
    sum += coef * v;
    mag += std::abs(coef * v);
    ++res.hulls;
  });
  const double df = factorial(d);
  sum /= df;
  mag /= df;
  if (sum < 0.0) {
    if (-sum > kTol.negativity * std::max(mag, 1e-300)) {
      throw NumericalError("mixed_volume: negative value " + std::to_string(sum) + " beyond cancellation noise");
    }
    sum = 0.0;
    res.clamped = true;
  }
  res.value = sum;
  return res;
}

double mixed_volume(const std::vector<Slot>& slots) { return mixed_volume_detailed(slots).value; }

double mixed_volume(const std::vector<Polytope>& bodies) { return mixed_volume(group_slots(bodies)); }

DiscreteMeasure mixed_area_measure(const std::vector<Slot>& slots) {
  const int d = check_slots(slots, -1, "mixed_area_measure");
  std::vector<Atom> atoms;
  for_each_subset_sum(slots, d - 1, [&](const std::vector<int>& c, double coef) {
    const Polytope s = subset_sum(slots, c);
    for (const auto& f : s.facets()) atoms.push_back({f.normal, coef * f.measure});
  });
  const double df = factorial(d - 1);
  for (auto& at : atoms) at.a /= df;
  return DiscreteMeasure(d, merge_atoms(std::move(atoms)), true);
}

DiscreteMeasure mixed_area_measure(const std::vector<Polytope>& bodies) {
  return mixed_area_measure(group_slots(bodies));
}

double mixed_volume_vs_function(const DiscreteMeasure& mixed_area, const std::function<double(const Vec&)>& f) {
  return mixed_area.integrate(f) / mixed_area.dim();
}

double mixed_volume_vs_function(const std::vector<Polytope>& bodies, const std::function<double(const Vec&)>& f) {
  return mixed_volume_vs_function(mixed_area_measure(bodies), f);
}

}  // namespace cpb
