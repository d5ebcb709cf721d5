#include "cpb/properties.hpp"

#include <doctest.h>

using namespace cpb;

namespace {

SuiteOptions small(int instances, std::uint64_t seed) {
  SuiteOptions o;
  o.m = 2;
  o.instances = instances;
  o.seed = seed;
  o.dirs = 100;
  return o;
}

}  // namespace

TEST_CASE("property suites pass at m = 2") {
  CHECK(two_path_suite(small(4, 1)).pass());
  CHECK(valuation_suite(small(4, 2)).pass());
  CHECK(contravariance_suite(small(4, 3)).pass());
  CHECK(gl_covariance_suite(small(4, 4)).pass());
  CHECK(c_translation_suite(small(4, 5)).pass());
  CHECK(symmetry_suite(small(3, 6)).pass());
}

TEST_CASE("the first valuation instance is a tangent cut") {
  const CheckReport r = valuation_suite(small(1, 7));
  REQUIRE(r.instances() == 1);
  CHECK(r.details[0].note == "tangent cut");
  CHECK(r.pass());
}

TEST_CASE("contravariance fails for the covariant action") {
  Rng rng(8);
  const ComplexSpace s(2);
  const Polytope k = random_hull(4, 10, rng);
  ComplexMatrix g;
  do g = random_sl(2, rng);
  while ((g.realify() - g.inverse_adjoint().realify()).norm() < 1e-2);
  // comparing Pi(gK) with Pi K transported by g instead of g^{-*}
  const auto pgk = projection_body(act(g, k), PlanarBody::unit_square(), s);
  const auto pk = projection_body(k, PlanarBody::unit_square(), s);
  const Mat gr = g.realify();
  const auto gap = support_gap([&](const Vec& w) { return pgk.support(w); },
                               [&](const Vec& w) { return pk.support(gr * w); }, test_directions(4, 50));
  CHECK(gap.rel > 1e-3);
  CHECK_THROWS_AS(check_contravariance(k, PlanarBody::unit_square(), ComplexMatrix::scalar(2, 2.0), s,
                                       test_directions(4, 10)),
                  InvalidArgument);
}

TEST_CASE("instance seeds are deterministic and distinct") {
  CHECK(instance_seed(1, 0) == instance_seed(1, 0));
  CHECK(instance_seed(1, 0) != instance_seed(1, 1));
  CHECK(instance_seed(1, 0) != instance_seed(2, 0));
  const CheckReport a = c_translation_suite(small(2, 9)), b = c_translation_suite(small(2, 9));
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("report bookkeeping") {
  CheckReport r("x", 1e-8);
  r.add_residual("a", 1.0, 1.0 + 1e-10);
  CHECK(r.pass());
  r.add_inequality("b", 1.0, 2.0);
  CHECK_FALSE(r.pass());
  CHECK(r.min_slack == doctest::Approx(-0.5));
  CHECK(CheckReport::csv_header() == "name,seed,m,C,residual,slack,tol,pass");
  CHECK(relative_residual(0.0, 1e-3) == doctest::Approx(1e-3));
}
