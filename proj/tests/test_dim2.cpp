#include "cpb/dim2.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cpb;

namespace {

// 2 V(L, M) = area(L + M) - area(L) - area(M), with areas from the shoelace oracle
double polarized(const PlanarBody& l, const PlanarBody& m) {
  std::vector<Eigen::Vector2d> sum, lp(l.vertices().begin(), l.vertices().end()),
      mp(m.vertices().begin(), m.vertices().end());
  for (const auto& a : lp)
    for (const auto& b : mp) sum.push_back(a + b);
  return oracle::hull_area(sum) - oracle::hull_area(lp) - oracle::hull_area(mp);
}

}  // namespace

TEST_CASE("degree-one valuation is twice the mixed area") {
  Rng rng(71);
  const DegreeOneValuation mu;
  for (int t = 0; t < 10; ++t) {
    const PlanarBody l = random_planar_body(3 + t % 4, rng);
    CHECK(mu(l) == doctest::Approx(polarized(l, mu.reference)).epsilon(1e-10));
  }
  const PlanarBody seg = PlanarBody::from_points({{0.0, 0.0}, {2.0, 1.0}});
  CHECK(mu(seg) == doctest::Approx(polarized(seg, mu.reference)).epsilon(1e-10));
  CHECK(mu(PlanarBody::point({1.0, 1.0})) == 0.0);
  const DegreeOneValuation sq{PlanarBody::unit_square()};
  CHECK(sq(PlanarBody::unit_square()) == doctest::Approx(2.0));
}

TEST_CASE("det body") {
  const ComplexSpace s(2);
  Rng rng(72);
  const Polytope k = random_hull(4, 8, rng);
  CHECK(det_body(k, Vec::Zero(4), s).dim() == 0);
  const Vec p = random_gaussian(4, rng), w = random_gaussian(4, rng);
  const PlanarBody single = det_body(Polytope::from_points(PointList{p}, true), w, s);
  REQUIRE(single.vertices().size() == 1);
  const cdouble z = cdouble(p(0), p(1)) * cdouble(w(2), w(3)) - cdouble(p(2), p(3)) * cdouble(w(0), w(1));
  CHECK(single.vertices()[0].x() == doctest::Approx(z.real()));
  CHECK(single.vertices()[0].y() == doctest::Approx(z.imag()));
  CHECK_THROWS_AS(det_body(random_hull(6, 10, rng), random_gaussian(6, rng), ComplexSpace(3)), InvalidArgument);
}

TEST_CASE("Z is contravariant, degree one and subadditive in w") {
  const ComplexSpace s(2);
  Rng rng(73);
  const DegreeOneValuation mu;
  const Polytope k = random_hull(4, 10, rng);
  const ComplexMatrix g = random_sl(2, rng);
  const Polytope gk = act(g, k);
  const Mat ginv = g.inverse().realify();
  for (int t = 0; t < 20; ++t) {
    const Vec w = random_gaussian(4, rng), v = random_gaussian(4, rng);
    CHECK(z_valuation(gk, w, mu, s) == doctest::Approx(z_valuation(k, ginv * w, mu, s)).epsilon(1e-9));
    CHECK(z_valuation(scale(k, 3.0), w, mu, s) == doctest::Approx(3.0 * z_valuation(k, w, mu, s)).epsilon(1e-12));
    CHECK(z_valuation(k, v + w, mu, s) <= z_valuation(k, v, mu, s) + z_valuation(k, w, mu, s) + 1e-12);
  }
  CHECK(z_valuation(Polytope::from_points(PointList{Vec::Ones(4)}, true), Vec::Ones(4), mu, s) == 0.0);
}

TEST_CASE("slope and suites") {
  CHECK(loglog_slope({1, 2, 4, 8}, {3, 24, 192, 1536}) == doctest::Approx(3.0));
  SuiteOptions o;
  o.instances = 4;
  o.dirs = 100;
  const CheckReport r = dim2_suite(o);
  CHECK(r.pass());
  CHECK(r.m == 2);
}
