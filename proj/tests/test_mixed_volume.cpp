#include "cpb/mixed_volume.hpp"
#include "cpb/sampling.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cpb;

TEST_CASE("diagonal mixed volume is the volume") {
  Rng rng(21);
  for (int d = 2; d <= 5; ++d) {
    const Polytope k = random_hull(d, d + 5, rng);
    CHECK(mixed_volume(std::vector<Slot>{{&k, d}}) == doctest::Approx(k.volume()).epsilon(1e-9));
  }
}

TEST_CASE("mixed volume of boxes is a permanent") {
  Rng rng(22);
  std::uniform_real_distribution<double> side(0.2, 2.0);
  for (int d = 2; d <= 4; ++d) {
    Mat a(d, d);
    std::vector<Polytope> boxes;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) a(i, j) = side(rng);
      boxes.push_back(box(Vec::Zero(d), a.row(i).transpose()));
    }
    CHECK(mixed_volume(boxes) == doctest::Approx(oracle::permanent(a) / oracle::factorial(d)).epsilon(1e-9));
  }
}

TEST_CASE("mixed volume of segments is a determinant") {
  Rng rng(23);
  for (int d = 2; d <= 4; ++d) {
    Mat v(d, d);
    std::vector<Polytope> segs;
    for (int i = 0; i < d; ++i) {
      v.col(i) = random_gaussian(d, rng);
      segs.push_back(segment(Vec::Zero(d), v.col(i)));
    }
    CHECK(mixed_volume(segs) == doctest::Approx(std::abs(v.determinant()) / oracle::factorial(d)).epsilon(1e-9));
  }
}

TEST_CASE("multilinearity and translation invariance") {
  Rng rng(24);
  const int d = 3;
  const Polytope k = random_simplex(d, rng), l = random_simplex(d, rng), m = random_simplex(d, rng);
  const double vk = mixed_volume({k, m, m}), vl = mixed_volume({l, m, m});
  CHECK(mixed_volume({minkowski_sum(k, l), m, m}) == doctest::Approx(vk + vl).epsilon(1e-9));
  CHECK(mixed_volume({translate(k, random_gaussian(d, rng)), m, m}) == doctest::Approx(vk).epsilon(1e-9));
}

TEST_CASE("mixed area measure integrates support functions") {
  Rng rng(25);
  const int d = 4;
  std::vector<Polytope> ks;
  for (int i = 0; i < d; ++i) ks.push_back(random_simplex(d, rng));
  const std::vector<Polytope> first(ks.begin(), ks.end() - 1);
  const double v = mixed_volume_vs_function(first, [&](const Vec& u) { return ks.back().support(u); });
  CHECK(v == doctest::Approx(mixed_volume(ks)).epsilon(1e-8));
}
