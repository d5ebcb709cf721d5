#include "cpb/measure.hpp"
#include "cpb/polytope.hpp"
#include "cpb/sampling.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cpb;

TEST_CASE("cube and cross-polytope volumes") {
  for (int d = 2; d <= 6; ++d) {
    const Polytope c = cube(d);
    CHECK(c.volume() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.facets().size() == static_cast<size_t>(2 * d));
    for (const auto& f : c.facets()) CHECK(f.measure == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cross_polytope(d).volume() == doctest::Approx(std::pow(2.0, d) / oracle::factorial(d)).epsilon(1e-12));
  }
}

TEST_CASE("random simplex volume matches the determinant formula") {
  Rng rng(11);
  for (int d = 2; d <= 6; ++d) {
    const Polytope s = random_simplex(d, rng);
    REQUIRE(s.num_vertices() == d + 1);
    CHECK(s.volume() == doctest::Approx(oracle::simplex_volume(s.vertices())).epsilon(1e-10));
  }
}

TEST_CASE("planar hull area matches the shoelace formula") {
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    const Polytope p = random_hull(2, 15, rng);
    std::vector<Eigen::Vector2d> pts;
    for (const auto& v : p.vertex_list()) pts.emplace_back(v(0), v(1));
    CHECK(p.volume() == doctest::Approx(oracle::hull_area(pts)).epsilon(1e-12));
  }
}

TEST_CASE("facet measures reproduce projection areas (Cauchy)") {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const Polytope p = random_hull(3, 12, rng);
    const Vec u = random_unit_vector(3, rng);
    // orthonormal frame of u-perp
    Eigen::Vector3d a = u.head<3>().unitOrthogonal(), b = u.head<3>().cross(a);
    std::vector<Eigen::Vector2d> proj;
    for (const auto& v : p.vertex_list()) proj.emplace_back(a.dot(v.head<3>()), b.dot(v.head<3>()));
    double s = 0.0;
    for (const auto& f : p.facets()) s += f.measure * std::abs(f.normal.dot(u));
    CHECK(0.5 * s == doctest::Approx(oracle::hull_area(proj)).epsilon(1e-10));
  }
}

TEST_CASE("surface area measure is centered and hull is idempotent") {
  Rng rng(14);
  for (int d = 3; d <= 6; ++d) {
    const Polytope p = random_hull(d, 2 * d + 4, rng);
    const DiscreteMeasure s = surface_area_measure(p);
    CHECK(s.first_moment().norm() <= 1e-10 * s.total_mass());
    const Polytope q = convex_hull(p.vertices());
    CHECK(q.num_vertices() == p.num_vertices());
    CHECK(q.volume() == doctest::Approx(p.volume()).epsilon(1e-12));
    CHECK(volume_by_facet_recursion(p.vertices()) == doctest::Approx(p.volume()).epsilon(1e-9));
  }
}

TEST_CASE("split pieces add up and support is translation covariant") {
  Rng rng(15);
  const Polytope p = random_hull(4, 14, rng);
  const Vec u = random_unit_vector(4, rng);
  const double c = 0.5 * (p.support(u) - p.support(-u));
  const auto [lo, hi] = split(p, u, c);
  CHECK(lo.volume() + hi.volume() == doctest::Approx(p.volume()).epsilon(1e-10));
  CHECK(section(p, u, c).volume() == 0.0);
  const Vec x = random_gaussian(4, rng);
  CHECK(translate(p, x).support(u) == doctest::Approx(p.support(u) + u.dot(x)).epsilon(1e-12));
}

TEST_CASE("Minkowski sum of boxes is a box") {
  const Vec lo1 = Vec::Constant(3, 0.0), hi1 = (Vec(3) << 1, 2, 3).finished();
  const Vec lo2 = Vec::Constant(3, -1.0), hi2 = (Vec(3) << 0.5, 0.5, 0.5).finished();
  const Polytope s = minkowski_sum(box(lo1, hi1), box(lo2, hi2));
  CHECK(s.volume() == doctest::Approx(2.5 * 3.5 * 4.5).epsilon(1e-12));
  CHECK(s.num_vertices() == 8);
}

TEST_CASE("lower-dimensional input") {
  PointList pts{Vec::Zero(3), Vec::Unit(3, 0), Vec::Unit(3, 1)};
  CHECK_THROWS_AS(Polytope::from_points(pts), DimensionError);
  const Polytope t = Polytope::from_points(pts, true);
  CHECK(t.affine_dim() == 2);
  CHECK(t.volume() == 0.0);
  CHECK(t.relative_volume() == doctest::Approx(0.5));
  CHECK(surface_area_measure(t).size() == 2);
}
