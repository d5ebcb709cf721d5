#include "cpb/projection_body.hpp"

namespace cpb {

ProjectionBodyResult::ProjectionBodyResult(const ComplexSpace& space, const PlanarBody& c, std::vector<Atom> trace)
    : space_(space), c_(c), trace_(std::move(trace)) {
  if (c_.vertices().empty()) throw InvalidArgument("projection body: empty planar body");
  for (const auto& a : trace_)
    if (a.u.size() != dim()) throw InvalidArgument("projection body: atom has wrong dimension");
}

double ProjectionBodyResult::support(const Vec& w) const {
  if (w.size() != dim()) throw InvalidArgument("projection body: direction has wrong dimension");
  const Vec jw = space_.i_times(w);
  double s = 0.0;
  for (const auto& a : trace_) s += a.a * c_.support(a.u.dot(w), a.u.dot(jw));
  return s / dim();
}

std::vector<FlatPiece> ProjectionBodyResult::summands() const {
  std::vector<FlatPiece> pieces;
  std::vector<Vec2> poly;
  Mat frame(dim(), 2);
  for (const auto& a : trace_) {
    // conj(c) u = a u - b Ju, i.e. coordinates (a, b) in the frame [u, -Ju]
    frame.col(0) = a.u;
    frame.col(1) = -space_.i_times(a.u);
    const double s = a.a / dim();
    poly.clear();
    for (const auto& v : c_.vertices()) poly.push_back(s * v);
    pieces.push_back(make_polygon_piece(Vec::Zero(dim()), frame, poly));
  }
  return pieces;
}

FlatSum ProjectionBodyResult::as_sum() const { return FlatSum(dim(), summands()); }

double ProjectionBodyResult::volume() const { return as_sum().volume(); }

std::vector<SumFacet> ProjectionBodyResult::facets() const { return as_sum().facets(); }

Polytope ProjectionBodyResult::body(int batch) const {
  if (trace_.empty()) return Polytope::from_points(Mat(Vec::Zero(dim())), true);
  return as_sum().materialize(batch);
}

namespace {

void check_dim(int d, const ComplexSpace& space) {
  if (d != space.real_dim())
    throw InvalidArgument("projection body: body lives in R^" + std::to_string(d) + ", expected R^" +
                          std::to_string(space.real_dim()));
}

}  // namespace

ProjectionBodyResult projection_body_from_measure(const DiscreteMeasure& s, const PlanarBody& c,
                                                  const ComplexSpace& space) {
  check_dim(s.dim(), space);
  return ProjectionBodyResult(space, c, s.atoms());
}

ProjectionBodyResult projection_body(const Polytope& k, const PlanarBody& c, const ComplexSpace& space) {
  check_dim(k.dim(), space);
  return projection_body_from_measure(surface_area_measure(k), c, space);
}

ProjectionBodyResult mixed_projection_body(const std::vector<Slot>& slots, const PlanarBody& c,
                                           const ComplexSpace& space) {
  if (slots.empty()) throw InvalidArgument("mixed projection body: no bodies");
  check_dim(slots.front().body->dim(), space);
  return projection_body_from_measure(mixed_area_measure(slots), c, space);
}

ProjectionBodyResult mixed_projection_body(const std::vector<Polytope>& bodies, const PlanarBody& c,
                                           const ComplexSpace& space) {
  if (static_cast<int>(bodies.size()) != space.real_dim() - 1)
    throw InvalidArgument("mixed projection body: expected " + std::to_string(space.real_dim() - 1) + " bodies, got " +
                          std::to_string(bodies.size()));
  return mixed_projection_body(group_slots(bodies), c, space);
}

double support_via_mixed_volume(const std::vector<Slot>& slots, const PlanarBody& c, const Vec& w,
                                const ComplexSpace& space) {
  if (w.size() != space.real_dim()) throw InvalidArgument("support: direction has wrong dimension");
  if (w.norm() == 0.0) throw InvalidArgument("support: zero direction");
  const Polytope cw = complex_segment_body(c, w, space);
  std::vector<Slot> all = slots;
  all.push_back({&cw, 1});
  return mixed_volume(all);
}

double support_via_mixed_volume(const Polytope& k, const PlanarBody& c, const Vec& w, const ComplexSpace& space) {
  check_dim(k.dim(), space);
  return support_via_mixed_volume(std::vector<Slot>{{&k, space.real_dim() - 1}}, c, w, space);
}

}  // namespace cpb
