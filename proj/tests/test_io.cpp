#include "cpb/io.hpp"
#include "cpb/sampling.hpp"

#include <doctest.h>

using namespace cpb;

TEST_CASE("polytope JSON round trip") {
  Rng rng(81);
  const Polytope p = random_hull(4, 10, rng);
  const Polytope q = polytope_from_json(Json::parse(to_json(p).dump()));
  CHECK(q.num_vertices() == p.num_vertices());
  CHECK(q.volume() == doctest::Approx(p.volume()).epsilon(1e-14));
}

TEST_CASE("measure, planar body and matrix round trips") {
  const DiscreteMeasure s = surface_area_measure(cube(3));
  const DiscreteMeasure t = measure_from_json(to_json(s));
  CHECK(t.size() == 6);
  CHECK(t.total_mass() == doctest::Approx(6.0));
  CHECK(to_json(s)["centered"] == true);
  const PlanarBody c = planar_from_json(to_json(PlanarBody::disk(8)));
  CHECK(c.vertices().size() == 8);
  Rng rng(82);
  const ComplexMatrix g = random_sl(3, rng);
  CHECK((complex_matrix_from_json(to_json(g)).matrix() - g.matrix()).norm() == 0.0);
}

TEST_CASE("projection body output carries the trace") {
  const Json j = to_json(projection_body(cube(4), PlanarBody::real_segment(), ComplexSpace(2)));
  CHECK(j["trace"].size() == 8);
  CHECK(j["dim"] == 4);
  CHECK(j.contains("vertices"));
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"vertices": [[0, 0]]})")), SchemaError);
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [[0, 0, 1]]})")), SchemaError);
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"dim": 2, "vertices": [[0, "a"]]})")), SchemaError);
  CHECK_THROWS_AS(measure_from_json(Json::parse(R"({"dim": 2, "atoms": [{"u": [1, 0], "a": -1}]})")), SchemaError);
  CHECK_THROWS_AS(measure_from_json(Json::parse(R"({"dim": 2, "atoms": [{"u": [0, 0], "a": 1}]})")), SchemaError);
  CHECK_THROWS_AS(complex_matrix_from_json(Json::parse(R"({"m": 2, "re": [[1]], "im": [[0]]})")), SchemaError);
  CHECK_THROWS_AS(load_json("/nonexistent/file.json"), SchemaError);
}
