#include "cpb/minkowski_solver.hpp"
#include "cpb/sampling.hpp"

#include <doctest.h>

using namespace cpb;

TEST_CASE("rectangle from its surface measure") {
  const DiscreteMeasure rho(2, {{Vec::Unit(2, 0), 1.0}, {-Vec::Unit(2, 0), 1.0}, {Vec::Unit(2, 1), 2.0},
                                {-Vec::Unit(2, 1), 2.0}});
  const Polytope p = solve_minkowski(rho);
  CHECK(p.volume() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(p.vertex_centroid().norm() <= 1e-9);
  CHECK(round_trip_residual(rho, p) <= 1e-6);
}

TEST_CASE("simplex recovered up to translation") {
  Rng rng(61);
  const Polytope s = random_simplex(4, rng);
  const DiscreteMeasure rho = surface_area_measure(s);
  const auto sol = solve_minkowski_detailed(rho);
  CHECK(sol.residual <= 1e-6);
  CHECK(sol.body.volume() == doctest::Approx(s.volume()).epsilon(1e-6));
  const Vec shift = s.vertex_centroid() - sol.body.vertex_centroid();
  for (int t = 0; t < 20; ++t) {
    const Vec u = random_unit_vector(4, rng);
    CHECK(sol.body.support(u) + u.dot(shift) == doctest::Approx(s.support(u)).epsilon(1e-5));
  }
}

TEST_CASE("balanced measures are centered") {
  Rng rng(62);
  std::vector<Atom> atoms;
  for (int i = 0; i < 7; ++i) atoms.push_back({random_unit_vector(4, rng), 0.5 + i * 0.1});
  const DiscreteMeasure b = balance_measure(DiscreteMeasure(4, atoms), 2);
  CHECK(b.first_moment().norm() <= 1e-12 * b.total_mass());
  for (const auto& a : b.atoms()) CHECK(a.a > 0.0);
}

TEST_CASE("invalid measures are rejected") {
  const DiscreteMeasure off(2, {{Vec::Unit(2, 0), 1.0}, {Vec::Unit(2, 1), 1.0}, {-Vec::Unit(2, 1), 1.0}});
  CHECK_THROWS_AS(solve_minkowski(off), InvalidArgument);
  const DiscreteMeasure flat(3, {{Vec::Unit(3, 0), 1.0}, {-Vec::Unit(3, 0), 1.0}});
  CHECK_THROWS_AS(solve_minkowski(flat), InvalidArgument);
}

TEST_CASE("round-trip suite") {
  SuiteOptions o;
  o.m = 2;
  o.instances = 3;
  o.seed = 5;
  CHECK(round_trip_suite(o).pass());
}

TEST_CASE("limit experiment") {
  const ComplexSpace s(2);
  const CheckReport zero = step2_limit_experiment({0.0, 0.0}, {0.0, 0.0}, PlanarBody::unit_square(), 3, s, 50);
  // the zero measure leaves only the balancing atoms, whose weight is O(eps_l)
  REQUIRE(zero.details.size() == 3);
  CHECK(zero.pass());
  CHECK(zero.details.back().abs_residual <= 0.3 * zero.details[1].abs_residual);
  const CheckReport gen = step2_limit_experiment({0.7, 0.3}, {-0.2, 1.1}, PlanarBody::unit_square(), 3, s, 50);
  CHECK(gen.pass());
  CHECK_THROWS_AS(step2_limit_experiment({1.0, 0.0}, {0.0, 0.0}, PlanarBody::unit_square(), 3, ComplexSpace(1)),
                  InvalidArgument);
}
