#include "cpb/projection_body.hpp"
#include "cpb/sampling.hpp"

#include <doctest.h>

using namespace cpb;

TEST_CASE("cube with a symmetric segment gives a cube") {
  const ComplexSpace s(3);
  const auto pb = projection_body(cube(6), PlanarBody::real_segment(), s);
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const Vec w = random_gaussian(6, rng);
    CHECK(pb.support(w) == doctest::Approx(w.cwiseAbs().sum() / 3.0).epsilon(1e-12));
  }
  CHECK(pb.volume() == doctest::Approx(std::pow(2.0 / 3.0, 6)).epsilon(1e-12));
  const Polytope body = pb.body();
  CHECK(body.num_vertices() == 64);
  CHECK(body.volume() == doctest::Approx(std::pow(2.0 / 3.0, 6)).epsilon(1e-10));
}

TEST_CASE("cube with a one-sided segment") {
  const ComplexSpace s(3);
  const auto pb = projection_body(cube(6), PlanarBody::from_points({{0.0, 0.0}, {1.0, 0.0}}), s);
  CHECK(pb.support(Vec::Unit(6, 0)) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("point C gives the origin") {
  const ComplexSpace s(2);
  Rng rng(42);
  const auto pb = projection_body(random_hull(4, 10, rng), PlanarBody::point({0.3, -0.2}), s);
  for (int t = 0; t < 10; ++t) CHECK(std::abs(pb.support(random_unit_vector(4, rng))) <= 1e-14);
}

TEST_CASE("facet sum agrees with polarization") {
  Rng rng(43);
  const ComplexSpace s(2);
  for (int t = 0; t < 5; ++t) {
    const Polytope k = random_hull(4, 9, rng);
    const PlanarBody c = random_planar_body(4, rng);
    const Vec w = random_unit_vector(4, rng);
    CHECK(projection_body(k, c, s).support(w) ==
          doctest::Approx(support_via_mixed_volume(k, c, w, s)).epsilon(1e-8));
  }
}

TEST_CASE("degree, translation invariance and additivity in C") {
  Rng rng(44);
  const ComplexSpace s(2);
  const Polytope k = random_hull(4, 10, rng);
  const PlanarBody c1 = random_planar_body(4, rng), c2 = random_planar_body(3, rng);
  const auto pk = projection_body(k, c1, s);
  const auto p2k = projection_body(scale(k, 2.0), c1, s);
  const auto pkx = projection_body(translate(k, random_gaussian(4, rng)), c1, s);
  const auto psum = projection_body(k, minkowski_sum(c1, c2), s);
  const auto pc2 = projection_body(k, c2, s);
  for (int t = 0; t < 20; ++t) {
    const Vec w = random_unit_vector(4, rng);
    CHECK(p2k.support(w) == doctest::Approx(8.0 * pk.support(w)).epsilon(1e-10));
    CHECK(pkx.support(w) == doctest::Approx(pk.support(w)).epsilon(1e-10));
    CHECK(psum.support(w) == doctest::Approx(pk.support(w) + pc2.support(w)).epsilon(1e-10));
  }
}

TEST_CASE("mixed projection body: diagonal case and arity") {
  Rng rng(45);
  const ComplexSpace s(2);
  const Polytope k = random_simplex(4, rng);
  const auto diag = mixed_projection_body(std::vector<Polytope>{k, k, k}, PlanarBody::unit_square(), s);
  const auto pk = projection_body(k, PlanarBody::unit_square(), s);
  for (int t = 0; t < 10; ++t) {
    const Vec w = random_unit_vector(4, rng);
    CHECK(diag.support(w) == doctest::Approx(pk.support(w)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(mixed_projection_body(std::vector<Polytope>{k, k}, PlanarBody::unit_square(), s), InvalidArgument);
}

TEST_CASE("facet-sum volume matches the materialized hull") {
  Rng rng(46);
  const ComplexSpace s(2);
  const auto pb = projection_body(random_simplex(4, rng), random_planar_body(4, rng), s);
  CHECK(pb.volume() == doctest::Approx(pb.body().volume()).epsilon(1e-9));
}
