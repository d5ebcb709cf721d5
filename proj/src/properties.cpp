#include "cpb/properties.hpp"

#include <cmath>
#include <numbers>

namespace cpb {

Shape builtin_shape(const std::string& name) {
  if (name == "point") return {PlanarBody::point(), "point"};
  if (name == "segment") return {PlanarBody::real_segment(), "segment"};
  if (name == "square") return {PlanarBody::unit_square(), "square"};
  if (name == "disk64" || name == "disk") return {PlanarBody::disk(64), "disk64"};
  throw InvalidArgument("unknown builtin shape '" + name + "'");
}

Shape random_shape(int index, Rng& rng) {
  switch (index % 4) {
    case 0:
      return builtin_shape("segment");
    case 1: {
      PlanarBody t;
      do t = random_planar_body(3, rng);
      while (t.area() < 0.05);
      return {t, "triangle"};
    }
    case 2:
      return builtin_shape("square");
    default: {
      PlanarBody p;
      do p = random_planar_body(5, rng);
      while (p.area() < 0.1);
      return {p, "polygon"};
    }
  }
}

PointList comparison_directions(const ComplexSpace& space, int count, const std::vector<Atom>& atoms) {
  PointList extra;
  for (const auto& a : atoms) {
    extra.push_back(a.u);
    extra.push_back(space.i_times(a.u));
  }
  return test_directions(space.real_dim(), count, extra);
}

SupportGap support_gap(const std::function<double(const Vec&)>& a, const std::function<double(const Vec&)>& b,
                       const PointList& dirs) {
  SupportGap g;
  for (const auto& w : dirs) {
    const double x = a(w), y = b(w);
    g.abs = std::max(g.abs, std::abs(x - y));
    g.rel = std::max(g.rel, relative_residual(x, y));
  }
  return g;
}

namespace {

InstanceResult gap_instance(std::string label, const SupportGap& g, double tol) {
  InstanceResult r;
  r.label = std::move(label);
  r.abs_residual = g.abs;
  r.rel_residual = g.rel;
  r.pass = g.rel <= tol;
  return r;
}

CheckReport make_report(const std::string& name, double tol, const ComplexSpace& space) {
  CheckReport rep(name, tol);
  rep.m = space.m();
  return rep;
}

std::function<double(const Vec&)> support_of(const ProjectionBodyResult& p) {
  return [&p](const Vec& w) { return p.support(w); };
}

}  // namespace

CheckReport check_valuation(const Polytope& p, const Vec& u, double c, const PlanarBody& shape,
                            const ComplexSpace& space, const PointList& dirs, double tol) {
  auto rep = make_report("valuation", tol, space);
  const auto [lower, upper] = split(p, u, c);
  const Polytope cut = section(p, u, c);
  const auto pp = projection_body(p, shape, space);
  const auto pk = projection_body(lower, shape, space);
  const auto pl = projection_body(upper, shape, space);
  const auto ps = projection_body(cut, shape, space);
  const auto g = support_gap([&](const Vec& w) { return pk.support(w) + pl.support(w); },
                             [&](const Vec& w) { return pp.support(w) + ps.support(w); }, dirs);
  auto& r = rep.add(gap_instance("split", g, tol));
  if (!lower.full_dimensional() || !upper.full_dimensional()) r.note = "tangent cut";
  return rep;
}

CheckReport check_contravariance(const Polytope& k, const PlanarBody& shape, const ComplexMatrix& g,
                                 const ComplexSpace& space, const PointList& dirs, double tol) {
  if (!g.is_special()) throw InvalidArgument("contravariance: g is not special, use the GL covariance check");
  auto rep = make_report("contravariance", tol, space);
  const auto pgk = projection_body(act(g, k), shape, space);
  const auto pk = projection_body(k, shape, space);
  const Mat ginv = g.inverse().realify();
  rep.add(gap_instance("g", support_gap(support_of(pgk), [&](const Vec& w) { return pk.support(ginv * w); }, dirs),
                       tol));
  return rep;
}

CheckReport check_gl_covariance(const Polytope& k, const PlanarBody& shape, const ComplexMatrix& g,
                                const ComplexSpace& space, const PointList& dirs, int degree, double tol) {
  const double det = std::abs(g.det());
  if (det == 0.0) throw InvalidArgument("covariance: singular matrix");
  auto rep = make_report("gl-covariance", tol, space);
  const double factor = std::pow(det, static_cast<double>(degree + 1) / space.m());
  const auto pgk = projection_body(act(g, k), shape, space);
  const auto pk = projection_body(k, shape, space);
  const Mat ginv = g.inverse().realify();
  rep.add(gap_instance(
      "g", support_gap(support_of(pgk), [&](const Vec& w) { return factor * pk.support(ginv * w); }, dirs), tol));
  return rep;
}

CheckReport check_symmetry(const std::vector<Slot>& ks, const std::vector<Slot>& ls, const PlanarBody& shape,
                           const ComplexSpace& space, double tol) {
  auto rep = make_report("symmetry", tol, space);
  const DiscreteMeasure sk = mixed_area_measure(ks);
  const DiscreteMeasure sl = mixed_area_measure(ls);
  if (sk.dim() != space.real_dim() || sl.dim() != space.real_dim())
    throw InvalidArgument("symmetry: bodies must live in R^2m");
  const auto pl = projection_body_from_measure(sl, shape, space);
  const auto pk = projection_body_from_measure(sk, shape.conjugate(), space);
  const double lhs = mixed_volume_vs_function(sk, support_of(pl));
  const double rhs = mixed_volume_vs_function(sl, support_of(pk));
  rep.add_residual("tuple", lhs, rhs);
  return rep;
}

CheckReport check_c_translation(const Polytope& k, const PlanarBody& shape, const Vec2& t, const ComplexSpace& space,
                                const PointList& dirs, double tol) {
  auto rep = make_report("c-translation", tol, space);
  const auto a = projection_body(k, shape, space);
  const auto b = projection_body(k, shape.translated(t), space);
  rep.add(gap_instance("t", support_gap(support_of(a), support_of(b), dirs), tol));
  return rep;
}

CheckReport check_two_paths(const Polytope& k, const PlanarBody& shape, const Vec& w, const ComplexSpace& space,
                            double tol) {
  auto rep = make_report("two-path", tol, space);
  const auto p = projection_body(k, shape, space);
  rep.add_residual("w", p.support(w), support_via_mixed_volume(k, shape, w, space));
  return rep;
}

// ---------------------------------------------------------------------------

std::uint64_t instance_seed(std::uint64_t seed, int i) {
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(i) + 1;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

struct Instance {
  std::uint64_t seed;
  Rng rng;
  Shape shape;
};

Instance make_instance(const SuiteOptions& opt, int i) {
  Instance in{instance_seed(opt.seed, i), Rng(instance_seed(opt.seed, i)), {}};
  in.shape = opt.shape ? *opt.shape : random_shape(i % std::max(1, opt.shape_kinds), in.rng);
  return in;
}

int hull_points(const SuiteOptions& opt) { return opt.points > 0 ? opt.points : 2 * opt.m + 6; }

template <typename Fn>
CheckReport run_suite(const std::string& name, double default_tol, const SuiteOptions& opt, Fn fn) {
  CheckReport rep(name, opt.tol.value_or(default_tol));
  rep.m = opt.m;
  rep.seed = opt.seed;
  rep.shape = opt.shape ? opt.shape->label : "random";
  for (int i = 0; i < opt.instances; ++i) {
    Instance in = make_instance(opt, i);
    CheckReport one = fn(in, rep.tol, i);
    for (auto r : one.details) {
      r.seed = in.seed;
      r.label = std::to_string(i) + ":" + in.shape.label + ":" + r.label;
      rep.add(std::move(r));
    }
  }
  return rep;
}

}  // namespace

CheckReport two_path_suite(const SuiteOptions& opt) {
  const ComplexSpace space(opt.m);
  return run_suite("two-path", 1e-8, opt, [&](Instance& in, double tol, int) {
    const Polytope k = random_hull(space.real_dim(), hull_points(opt), in.rng);
    const Vec w = random_unit_vector(space.real_dim(), in.rng);
    return check_two_paths(k, in.shape.body, w, space, tol);
  });
}

CheckReport valuation_suite(const SuiteOptions& opt) {
  const ComplexSpace space(opt.m);
  return run_suite("valuation", 1e-8, opt, [&](Instance& in, double tol, int i) {
    const Polytope p = random_hull(space.real_dim(), hull_points(opt), in.rng);
    Vec u;
    double c;
    if (i == 0) {
      // hyperplane of a facet: one piece is the facet itself
      const auto& f = p.facets()[in.rng() % p.facets().size()];
      u = f.normal;
      c = f.offset;
    } else {
      u = random_unit_vector(space.real_dim(), in.rng);
      const double hi = p.support(u), lo = -p.support(-u);
      std::uniform_real_distribution<double> t(0.25, 0.75);
      c = lo + t(in.rng) * (hi - lo);
    }
    const auto dirs = comparison_directions(space, opt.dirs, surface_area_measure(p).atoms());
    return check_valuation(p, u, c, in.shape.body, space, dirs, tol);
  });
}

CheckReport contravariance_suite(const SuiteOptions& opt) {
  const ComplexSpace space(opt.m);
  return run_suite("contravariance", 1e-7, opt, [&](Instance& in, double tol, int) {
    const Polytope k = random_hull(space.real_dim(), hull_points(opt), in.rng);
    const ComplexMatrix g = random_sl(opt.m, in.rng);
    const auto dirs = comparison_directions(space, opt.dirs, surface_area_measure(k).atoms());
    return check_contravariance(k, in.shape.body, g, space, dirs, tol);
  });
}

CheckReport gl_covariance_suite(const SuiteOptions& opt) {
  const ComplexSpace space(opt.m);
  return run_suite("gl-covariance", 1e-7, opt, [&](Instance& in, double tol, int i) {
    const Polytope k = random_hull(space.real_dim(), hull_points(opt), in.rng);
    ComplexMatrix g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    switch (i % 4) {
      case 0:  // unit complex scalar
        g = ComplexMatrix::scalar(opt.m, std::polar(1.0, 2.0 * std::numbers::pi * u(in.rng)));
        break;
      case 1:  // positive real scalar
        g = ComplexMatrix::scalar(opt.m, cdouble(0.5 + 1.5 * u(in.rng), 0.0));
        break;
      case 2: {  // complex diagonal
        CMat d = CMat::Zero(opt.m, opt.m);
        for (int j = 0; j < opt.m; ++j) d(j, j) = std::polar(0.5 + u(in.rng), 2.0 * std::numbers::pi * u(in.rng));
        g = ComplexMatrix(d);
        break;
      }
      default:
        g = random_gl(opt.m, in.rng);
    }
    const auto dirs = comparison_directions(space, opt.dirs, surface_area_measure(k).atoms());
    return check_gl_covariance(k, in.shape.body, g, space, dirs, 2 * opt.m - 1, tol);
  });
}

std::vector<Slot> random_tuple(int m, int index, Rng& rng, std::vector<Polytope>& bodies) {
  const int n = 2 * m - 1;
  // multiplicity patterns with two or three distinct bodies
  std::vector<std::vector<int>> patterns;
  for (int a = n - 1; a >= 1; --a) patterns.push_back({a, n - a});
  for (int a = n - 2; a >= 1; --a)
    for (int b = n - a - 1; b >= 1; --b)
      if (a >= b && b >= n - a - b) patterns.push_back({a, b, n - a - b});
  const auto& pat = patterns[index % patterns.size()];
  bodies.clear();
  bodies.reserve(pat.size());
  for (size_t j = 0; j < pat.size(); ++j) bodies.push_back(random_simplex(2 * m, rng));
  std::vector<Slot> slots;
  for (size_t j = 0; j < pat.size(); ++j) slots.push_back({&bodies[j], pat[j]});
  return slots;
}

CheckReport symmetry_suite(const SuiteOptions& opt) {
  const ComplexSpace space(opt.m);
  return run_suite("symmetry", 1e-6, opt, [&](Instance& in, double tol, int i) {
    std::vector<Polytope> kb, lb;
    const auto ks = random_tuple(opt.m, i, in.rng, kb);
    const auto ls = random_tuple(opt.m, i + 1, in.rng, lb);
    return check_symmetry(ks, ls, in.shape.body, space, tol);
  });
}

CheckReport c_translation_suite(const SuiteOptions& opt) {
  const ComplexSpace space(opt.m);
  return run_suite("c-translation", 1e-10, opt, [&](Instance& in, double tol, int) {
    const Polytope k = random_hull(space.real_dim(), hull_points(opt), in.rng);
    const Vec2 t = random_gaussian(2, in.rng);
    const auto dirs = comparison_directions(space, opt.dirs, surface_area_measure(k).atoms());
    return check_c_translation(k, in.shape.body, t, space, dirs, tol);
  });
}

}  // namespace cpb
