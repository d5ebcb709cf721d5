#include "cpb/complex_structure.hpp"

#include <doctest.h>

#include <numbers>

using namespace cpb;

TEST_CASE("complex structure") {
  for (int m = 1; m <= 4; ++m) {
    const ComplexSpace s(m);
    CHECK((s.J() * s.J() + Mat::Identity(2 * m, 2 * m)).norm() == 0.0);
    Eigen::VectorXcd z(m);
    for (int j = 0; j < m; ++j) z(j) = cdouble(j + 1.0, -0.5 * j);
    const Vec x = s.from_complex(z);
    CHECK((s.to_complex(s.i_times(x)) - cdouble(0, 1) * z).norm() <= 1e-15);
  }
}

TEST_CASE("realification is a homomorphism") {
  Rng rng(31);
  for (int m = 2; m <= 3; ++m) {
    const ComplexMatrix g = random_gl(m, rng), h = random_gl(m, rng);
    const ComplexMatrix gh(g.matrix() * h.matrix());
    CHECK((gh.realify() - g.realify() * h.realify()).norm() <= 1e-12);
    CHECK(g.realify().determinant() == doctest::Approx(std::norm(g.det())).epsilon(1e-10));
    CHECK((g.inverse_adjoint().realify() - g.realify().inverse().transpose()).norm() <= 1e-10);
    const ComplexMatrix a = random_sl(m, rng);
    CHECK(a.is_special());
    CHECK(std::abs(a.det() - 1.0) <= 1e-10);
  }
}

TEST_CASE("planar bodies") {
  const PlanarBody sq = PlanarBody::unit_square();
  CHECK(sq.area() == doctest::Approx(1.0));
  CHECK(sq.perimeter() == doctest::Approx(4.0));
  CHECK(sq.support(1.0, 1.0) == doctest::Approx(2.0));
  CHECK(sq.conjugate().support(0.0, -1.0) == doctest::Approx(1.0));
  const PlanarBody disk = PlanarBody::disk(64);
  CHECK(disk.area() == doctest::Approx(32.0 * std::sin(2.0 * std::numbers::pi / 64.0)));
  CHECK(PlanarBody::point().dim() == 0);
  CHECK(PlanarBody::real_segment().dim() == 1);
  const PlanarBody s = minkowski_sum(sq, PlanarBody::real_segment());
  CHECK(s.area() == doctest::Approx(3.0));
  CHECK(contains(s, sq));
  CHECK(sq.translated({1.0, 2.0}).support(0.0, 1.0) == doctest::Approx(3.0));
}

TEST_CASE("f_w is the support function of C.w") {
  Rng rng(32);
  const ComplexSpace s(3);
  const PlanarBody c = random_planar_body(5, rng);
  const Vec w = random_gaussian(6, rng);
  const Polytope cw = complex_segment_body(c, w, s);
  const auto f = f_w(c, w, s);
  for (int t = 0; t < 20; ++t) {
    const Vec xi = random_unit_vector(6, rng);
    CHECK(f(xi) == doctest::Approx(cw.support(xi)).epsilon(1e-12));
  }
}
