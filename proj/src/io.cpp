#include "cpb/io.hpp"

#include <fstream>
#include <iostream>

namespace cpb {

Json load_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("'" + path + "': " + e.what());
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw SchemaError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Vec vector_of(const Json& j, int d, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw SchemaError(std::string(what) + " must be an array of " + std::to_string(d) + " numbers");
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = number(j[i], what);
  return v;
}

Json array_of(const Vec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Mat matrix_of(const Json& j, int m, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw SchemaError(std::string(what) + " must have " + std::to_string(m) + " rows");
  Mat a(m, m);
  for (int r = 0; r < m; ++r) a.row(r) = vector_of(j[r], m, what).transpose();
  return a;
}

}  // namespace

Json to_json(const Polytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json v = Json::array();
  for (int c = 0; c < p.num_vertices(); ++c) v.push_back(array_of(p.vertices().col(c)));
  j["vertices"] = v;
  j["volume"] = p.volume();
  Json f = Json::array();
  for (const auto& facet : p.facets())
    f.push_back({{"normal", array_of(facet.normal)}, {"offset", facet.offset}, {"measure", facet.measure}});
  j["facets"] = f;
  return j;
}

Polytope polytope_from_json(const Json& j, bool allow_lower_dim) {
  const int d = integer(field(j, "dim"), "dim");
  if (d < 1) throw SchemaError("dim must be positive");
  const Json& v = field(j, "vertices");
  if (!v.is_array() || v.empty()) throw SchemaError("vertices must be a nonempty array");
  PointList pts;
  for (const auto& x : v) pts.push_back(vector_of(x, d, "vertex"));
  return Polytope::from_points(pts, allow_lower_dim);
}

Json to_json(const DiscreteMeasure& s) {
  Json j;
  j["dim"] = s.dim();
  Json a = Json::array();
  for (const auto& atom : s.atoms()) a.push_back({{"u", array_of(atom.u)}, {"a", atom.a}});
  j["atoms"] = a;
  j["centered"] = s.is_centered();
  return j;
}

DiscreteMeasure measure_from_json(const Json& j) {
  const int d = integer(field(j, "dim"), "dim");
  if (d < 1) throw SchemaError("dim must be positive");
  const Json& a = field(j, "atoms");
  if (!a.is_array()) throw SchemaError("atoms must be an array");
  std::vector<Atom> atoms;
  for (const auto& x : a) {
    Atom atom{vector_of(field(x, "u"), d, "u"), number(field(x, "a"), "a")};
    if (atom.u.norm() == 0.0) throw SchemaError("atom direction must be nonzero");
    if (atom.a < 0.0) throw SchemaError("atom weight must be nonnegative");
    atoms.push_back(std::move(atom));
  }
  bool centered = false;
  if (j.contains("centered")) {
    if (!j["centered"].is_boolean()) throw SchemaError("centered must be a boolean");
    centered = j["centered"].get<bool>();
  }
  return DiscreteMeasure(d, std::move(atoms), centered);
}

Json to_json(const PlanarBody& c) {
  Json v = Json::array();
  for (const auto& p : c.vertices()) v.push_back({p.x(), p.y()});
  return {{"vertices", v}};
}

PlanarBody planar_from_json(const Json& j) {
  const Json& v = field(j, "vertices");
  if (!v.is_array() || v.empty()) throw SchemaError("vertices must be a nonempty array");
  std::vector<Vec2> pts;
  for (const auto& x : v) pts.push_back(vector_of(x, 2, "planar vertex"));
  return PlanarBody::from_points(pts);
}

Json to_json(const ComplexMatrix& g) {
  Json re = Json::array(), im = Json::array();
  for (int r = 0; r < g.m(); ++r) {
    re.push_back(array_of(g.matrix().row(r).real().transpose()));
    im.push_back(array_of(g.matrix().row(r).imag().transpose()));
  }
  return {{"m", g.m()}, {"re", re}, {"im", im}};
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
  const int m = integer(field(j, "m"), "m");
  if (m < 1) throw SchemaError("m must be positive");
  const Mat re = matrix_of(field(j, "re"), m, "re");
  const Mat im = matrix_of(field(j, "im"), m, "im");
  CMat g(m, m);
  g.real() = re;
  g.imag() = im;
  return ComplexMatrix(g);
}

Json to_json(const ProjectionBodyResult& p, bool with_body) {
  Json j = with_body ? to_json(p.body()) : Json{{"dim", p.dim()}};
  j["m"] = p.m();
  j["C"] = to_json(p.shape());
  Json t = Json::array();
  for (const auto& a : p.trace()) t.push_back({{"u", array_of(a.u)}, {"a", a.a}});
  j["trace"] = t;
  return j;
}

}  // namespace cpb
