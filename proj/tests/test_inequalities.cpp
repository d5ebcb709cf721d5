#include "cpb/inequalities.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cpb;

namespace {

SuiteOptions small(int instances, std::uint64_t seed) {
  SuiteOptions o;
  o.m = 2;
  o.instances = instances;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("ball approximant brackets the unit ball") {
  for (int d : {3, 4}) {
    const BallApproximant b = make_ball_approximant(d, 16);
    CHECK(b.delta > 0.0);
    const double v = oracle::ball_volume(d);
    CHECK(b.body.volume() <= v);
    CHECK(v <= std::pow(1.0 + b.delta, d) * b.body.volume());
    for (const auto& x : b.body.vertex_list()) CHECK(x.norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("quermassintegrals of the cube") {
  const int d = 4;
  const Polytope c = cube(d);
  // W_1 is the surface area over d
  CHECK(exact_first_quermassintegral(c) == doctest::Approx(2.0));
  const BallApproximant b = make_ball_approximant(d, 16);
  const Estimate w1 = quermassintegral(c, 1, b);
  CHECK(w1.lower <= 2.0 + 1e-12);
  CHECK(2.0 <= w1.upper + 1e-12);
  const Estimate wd = quermassintegral(c, d, b);
  CHECK(wd.value == doctest::Approx(b.body.volume()));
  // W_{d-1}(K) = (1/d) int h_K dS_B is the mean width times kappa_d / 2
  const Estimate w3 = quermassintegral(c, d - 1, b);
  CHECK(w3.value > 0.0);
}

TEST_CASE("Brunn-Minkowski type: strict and equality witnesses") {
  Rng rng(51);
  const ComplexSpace s(2);
  const Polytope k = random_simplex(4, rng);
  const CheckReport eq = check_bm_type(k, translate(scale(k, 2.0), random_gaussian(4, rng)),
                                       PlanarBody::unit_square(), s);
  CHECK(eq.pass());
  CHECK(std::abs(eq.min_slack) <= 1e-6);
  const CheckReport strict = check_bm_type(cube(4, -1.0, 1.0), random_simplex(4, rng), PlanarBody::unit_square(), s);
  CHECK(strict.pass());
  CHECK(strict.min_slack > 1e-6);
}

TEST_CASE("inequality suites pass at m = 2") {
  CHECK(bm_suite(small(12, 1)).pass());
  CHECK(af_suite(small(12, 2), 0, 2).pass());
  CHECK(minkowski_type_suite(small(12, 3), 0).pass());
  CHECK(classical_suite(small(6, 4), 0).pass());
  CHECK(classical_suite(small(3, 5), 1).pass());
  CHECK(minkowski_type_suite(small(3, 6), 1).pass());
}

TEST_CASE("proportionality ratio spread within the ball bound") {
  SuiteOptions o = small(2, 7);
  o.ball_n = 16;
  const CheckReport r = proportionality_suite(o);
  CHECK(r.pass());
  CHECK(r.max_rel <= r.tol);
}
