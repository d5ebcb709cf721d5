#include "cpb/dim2.hpp"

#include "cpb/projection_body.hpp"

#include <cmath>
#include <cstdio>

namespace cpb {

double DegreeOneValuation::operator()(const PlanarBody& l) const {
  const auto& v = l.vertices();
  const size_t n = v.size();
  if (n < 2) return 0.0;
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Vec2 e = v[(i + 1) % n] - v[i];
    const double len = e.norm();
    if (len == 0.0) continue;
    s += len * reference.support(e.y() / len, -e.x() / len);
  }
  return s;
}

namespace {

void require_m2(const ComplexSpace& space) {
  if (space.m() != 2) throw InvalidArgument("dim2: requires m = 2");
}

}  // namespace

PlanarBody det_body(const Polytope& k, const Vec& w, const ComplexSpace& space) {
  require_m2(space);
  if (k.dim() != 4 || w.size() != 4) throw InvalidArgument("dim2: bodies and directions must live in R^4");
  const Eigen::VectorXcd wc = space.to_complex(w);
  std::vector<Vec2> pts;
  for (int j = 0; j < k.num_vertices(); ++j) {
    const Eigen::VectorXcd kc = space.to_complex(k.vertices().col(j));
    const cdouble z = kc(0) * wc(1) - kc(1) * wc(0);
    pts.emplace_back(z.real(), z.imag());
  }
  return PlanarBody::from_points(pts);
}

double z_valuation(const Polytope& k, const Vec& w, const DegreeOneValuation& mu, const ComplexSpace& space) {
  return mu(det_body(k, w, space));
}

double loglog_slope(const std::vector<double>& ts, const std::vector<double>& values) {
  if (ts.size() != values.size() || ts.size() < 2) throw InvalidArgument("slope: need at least two samples");
  const int n = static_cast<int>(ts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    if (ts[i] <= 0.0 || values[i] <= 0.0) throw InvalidArgument("slope: samples must be positive");
    const double x = std::log(ts[i]), y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

CheckReport make_report(const std::string& name, double tol) {
  CheckReport rep(name, tol);
  rep.m = 2;
  rep.shape = "disk64";
  return rep;
}

InstanceResult slope_instance(std::string label, double slope, double expected, double tol) {
  InstanceResult r;
  r.label = std::move(label);
  r.abs_residual = std::abs(slope - expected);
  r.rel_residual = r.abs_residual;
  r.pass = r.abs_residual <= tol;
  char buf[64];
  std::snprintf(buf, sizeof buf, "slope %.12g", slope);
  r.note = buf;
  return r;
}

}  // namespace

CheckReport check_dim2_valuation(const Polytope& p, const Vec& u, double c, const DegreeOneValuation& mu,
                                 const ComplexSpace& space, const PointList& dirs, double tol) {
  auto rep = make_report("dim2-valuation", tol);
  const auto [lower, upper] = split(p, u, c);
  const Polytope cut = section(p, u, c);
  const auto g = support_gap(
      [&](const Vec& w) { return z_valuation(lower, w, mu, space) + z_valuation(upper, w, mu, space); },
      [&](const Vec& w) { return z_valuation(p, w, mu, space) + z_valuation(cut, w, mu, space); }, dirs);
  InstanceResult r;
  r.label = "split";
  r.abs_residual = g.abs;
  r.rel_residual = g.rel;
  r.pass = g.rel <= tol;
  if (!lower.full_dimensional() || !upper.full_dimensional()) r.note = "tangent cut";
  rep.add(std::move(r));
  return rep;
}

CheckReport check_dim2_contravariance(const Polytope& k, const ComplexMatrix& g, const DegreeOneValuation& mu,
                                      const ComplexSpace& space, const PointList& dirs, double tol) {
  if (!g.is_special()) throw InvalidArgument("dim2 contravariance: g is not special");
  auto rep = make_report("dim2-contravariance", tol);
  const Polytope gk = act(g, k);
  const Mat ginv = g.inverse().realify();
  const auto gap = support_gap([&](const Vec& w) { return z_valuation(gk, w, mu, space); },
                               [&](const Vec& w) { return z_valuation(k, ginv * w, mu, space); }, dirs);
  InstanceResult r;
  r.label = "g";
  r.abs_residual = gap.abs;
  r.rel_residual = gap.rel;
  r.pass = gap.rel <= tol;
  rep.add(std::move(r));
  return rep;
}

CheckReport check_dim2_homogeneity(const Polytope& k, const PlanarBody& shape, const DegreeOneValuation& mu,
                                   const ComplexSpace& space, const PointList& dirs, double tol) {
  require_m2(space);
  auto rep = make_report("dim2-homogeneity", tol);
  const std::vector<double> ts{1.0, 2.0, 4.0, 8.0};
  std::vector<Polytope> scaled;
  std::vector<ProjectionBodyResult> pis;
  for (double t : ts) {
    scaled.push_back(scale(k, t));
    pis.push_back(projection_body(scaled.back(), shape, space));
  }
  double worst_z = 1.0, worst_pi = 3.0;
  for (const auto& w : dirs) {
    std::vector<double> z, pi;
    for (size_t i = 0; i < ts.size(); ++i) {
      z.push_back(z_valuation(scaled[i], w, mu, space));
      pi.push_back(pis[i].support(w));
    }
    // zero supports occur for lower-dimensional C and carry no slope
    if (z.front() > 0.0) {
      const double s = loglog_slope(ts, z);
      if (std::abs(s - 1.0) > std::abs(worst_z - 1.0)) worst_z = s;
    }
    if (pi.front() > 0.0) {
      const double s = loglog_slope(ts, pi);
      if (std::abs(s - 3.0) > std::abs(worst_pi - 3.0)) worst_pi = s;
    }
  }
  rep.add(slope_instance("Z degree", worst_z, 1.0, tol));
  rep.add(slope_instance("Pi_C degree", worst_pi, 3.0, tol));
  return rep;
}

namespace {

template <typename Fn>
CheckReport run(const std::string& name, double default_tol, const SuiteOptions& opt, Fn fn) {
  CheckReport rep = make_report(name, opt.tol.value_or(default_tol));
  rep.seed = opt.seed;
  for (int i = 0; i < opt.instances; ++i) {
    const std::uint64_t s = instance_seed(opt.seed, i);
    Rng rng(s);
    CheckReport one = fn(rng, rep.tol, i);
    for (auto r : one.details) {
      r.seed = s;
      r.label = std::to_string(i) + ":" + r.label;
      rep.add(std::move(r));
    }
  }
  return rep;
}

int hull_points(const SuiteOptions& opt) { return opt.points > 0 ? opt.points : 10; }

}  // namespace

CheckReport dim2_valuation_suite(const SuiteOptions& opt) {
  const ComplexSpace space(2);
  const DegreeOneValuation mu;
  return run("dim2-valuation", 1e-8, opt, [&](Rng& rng, double tol, int i) {
    const Polytope p = random_hull(4, hull_points(opt), rng);
    Vec u;
    double c;
    if (i == 0) {
      const auto& f = p.facets()[rng() % p.facets().size()];
      u = f.normal;
      c = f.offset;
    } else {
      u = random_unit_vector(4, rng);
      const double hi = p.support(u), lo = -p.support(-u);
      std::uniform_real_distribution<double> t(0.25, 0.75);
      c = lo + t(rng) * (hi - lo);
    }
    return check_dim2_valuation(p, u, c, mu, space, test_directions(4, opt.dirs), tol);
  });
}

CheckReport dim2_contravariance_suite(const SuiteOptions& opt) {
  const ComplexSpace space(2);
  const DegreeOneValuation mu;
  return run("dim2-contravariance", 1e-7, opt, [&](Rng& rng, double tol, int) {
    const Polytope k = random_hull(4, hull_points(opt), rng);
    const ComplexMatrix g = random_sl(2, rng);
    return check_dim2_contravariance(k, g, mu, space, test_directions(4, opt.dirs), tol);
  });
}

CheckReport dim2_homogeneity_suite(const SuiteOptions& opt) {
  const ComplexSpace space(2);
  const DegreeOneValuation mu;
  return run("dim2-homogeneity", 1e-6, opt, [&](Rng& rng, double tol, int i) {
    const Polytope k = random_hull(4, hull_points(opt), rng);
    const Shape shape = opt.shape ? *opt.shape : random_shape(i, rng);
    return check_dim2_homogeneity(k, shape.body, mu, space, test_directions(4, opt.dirs), tol);
  });
}

CheckReport dim2_suite(const SuiteOptions& opt) {
  CheckReport rep = make_report("dim2", opt.tol.value_or(1e-6));
  rep.seed = opt.seed;
  SuiteOptions sub = opt;
  sub.tol.reset();
  rep.merge(dim2_valuation_suite(sub), "valuation:");
  rep.merge(dim2_contravariance_suite(sub), "contravariance:");
  rep.merge(dim2_homogeneity_suite(sub), "homogeneity:");
  rep.notes.push_back("K -> h(ZK, w) has degree 1 while Pi_C has degree 3, so Z is not of the form Pi_C");
  return rep;
}

}  // namespace cpb
