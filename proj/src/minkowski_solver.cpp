#include "cpb/minkowski_solver.hpp"

#include "cpb/projection_body.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <cmath>
#include <limits>

namespace cpb {

namespace {

Mat directions(const std::vector<Atom>& atoms, int d) {
  Mat u(d, atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) u.col(i) = atoms[i].u;
  return u;
}

Vec weights(const std::vector<Atom>& atoms) {
  Vec a(atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) a(i) = atoms[i].a;
  return a;
}

Mat frame(int d, int index) {
  if (index == 0) return Mat::Identity(d, d);
  Rng rng(0x6a09e667f3bcc908ull + static_cast<std::uint64_t>(index));
  Mat g(d, d);
  for (int j = 0; j < d; ++j) g.col(j) = random_gaussian(d, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  return qr.householderQ() * Mat::Identity(d, d);
}

}  // namespace

DiscreteMeasure balance_measure(const DiscreteMeasure& rho, int spread, double eps) {
  if (spread < 0) throw InvalidArgument("balance_measure: spread must be nonnegative");
  const int d = rho.dim();
  if (d < 1) throw InvalidArgument("balance_measure: empty measure without dimension");
  const double mass = rho.total_mass();
  if (eps <= 0.0) eps = 1e-3 * (mass > 0.0 ? mass : 1.0);

  std::vector<Atom> atoms = rho.atoms();
  for (int f = 0; f < spread; ++f) {
    const Mat q = frame(d, f);
    for (int j = 0; j < d; ++j) {
      atoms.push_back({q.col(j), eps});
      atoms.push_back({-q.col(j), eps});
    }
  }
  atoms = merge_atoms(std::move(atoms));
  if (atoms.empty()) return DiscreteMeasure(d, {}, true);

  const Mat u = directions(atoms, d);
  Vec a = weights(atoms);
  const double total = a.sum();
  for (int pass = 0; pass < 3; ++pass) {
    const Vec r = u * a;
    if (r.norm() <= 1e-16 * total) break;
    const Vec d2 = a.cwiseProduct(a);
    const Mat g = u * d2.asDiagonal() * u.transpose();
    const Vec lambda = g.completeOrthogonalDecomposition().solve(r);
    a -= d2.cwiseProduct(u.transpose() * lambda);
    if ((a.array() <= 0.0).any())
      throw NumericalError("balance_measure: weight correction makes an atom non-positive");
  }
  for (size_t i = 0; i < atoms.size(); ++i) atoms[i].a = a(i);
  return DiscreteMeasure(d, std::move(atoms), true);
}

// ---------------------------------------------------------------------------

namespace {

// {y in R^k : a_j . y <= b_j} with unit rows a_j, carried together with the
// affine map y -> origin + basis * y into R^d.
struct HSystem {
  Mat a;
  Vec b;
  std::vector<int> ids;  // constraint index at the top level
  Vec origin;
  Mat basis;
};

// Restriction of s to the face a_i . y = b_i, in coordinates of that hyperplane.
// Parallel constraints collapse to the tightest one. Returns false if the
// face is empty.
bool restrict_to_face(const HSystem& s, int i, double tol, HSystem& out) {
  const int k = static_cast<int>(s.a.cols());
  const int m = static_cast<int>(s.a.rows());
  const Vec ai = s.a.row(i).transpose();
  Eigen::HouseholderQR<Mat> qr{Mat(ai)};
  const Mat q = (qr.householderQ() * Mat::Identity(k, k)).rightCols(k - 1);
  const Vec y0 = s.b(i) * ai;
  Mat a(m - 1, k - 1);
  Vec b(m - 1);
  std::vector<int> ids;
  int r = 0;
  for (int j = 0; j < m; ++j) {
    if (j == i) continue;
    Vec aj = q.transpose() * s.a.row(j).transpose();
    double bj = s.b(j) - s.a.row(j).dot(y0);
    const double nrm = aj.norm();
    if (nrm <= 1e-12) {
      if (bj < -tol) return false;
      continue;
    }
    aj /= nrm;
    bj /= nrm;
    int dup = -1;
    // an interval does not care about repeated bounds
    if (k > 2)
      for (int l = 0; l < r && dup < 0; ++l)
        if (a.row(l).dot(aj) > 1.0 - 1e-12) dup = l;
    if (dup >= 0) {
      if (bj < b(dup)) {
        b(dup) = bj;
        ids[dup] = s.ids[j];
      }
      continue;
    }
    a.row(r) = aj.transpose();
    b(r) = bj;
    ids.push_back(s.ids[j]);
    ++r;
  }
  out.a = a.topRows(r);
  out.b = b.head(r);
  out.ids = std::move(ids);
  out.origin = s.origin + s.basis * y0;
  out.basis = s.basis * q;
  return true;
}

// k-volume by the recursion vol_k = (1/k) sum_j b_j vol_{k-1}(F_j). face(j)
// gets vol_{k-1}(F_j); ridge, if given, collects vol_{k-2}(F_j cap F_l) by
// top-level ids; vertices, if given, collects all vertices (with repeats).
double hvolume(const HSystem& s, double tol, Vec* face, Mat* ridge, PointList* vertices) {
  const int k = static_cast<int>(s.a.cols());
  const int m = static_cast<int>(s.a.rows());
  if (face) *face = Vec::Zero(m);
  if (k == 2) {
    // polygon: clip each edge line by the other half-planes
    const double inf = std::numeric_limits<double>::infinity();
    double area = 0.0;
    for (int j = 0; j < m; ++j) {
      const double ax = s.a(j, 0), ay = s.a(j, 1), bj = s.b(j);
      const double tx = -ay, ty = ax;
      double lo = -inf, hi = inf;
      int jlo = -1, jhi = -1;
      bool empty = false;
      for (int l = 0; l < m && !empty; ++l) {
        if (l == j) continue;
        const double c = s.a(l, 0) * tx + s.a(l, 1) * ty;
        const double rhs = s.b(l) - bj * (s.a(l, 0) * ax + s.a(l, 1) * ay);
        if (std::abs(c) <= 1e-12) {
          empty = rhs < -tol;
        } else if (c > 0.0) {
          if (rhs / c < hi) {
            hi = rhs / c;
            jhi = l;
          }
        } else if (rhs / c > lo) {
          lo = rhs / c;
          jlo = l;
        }
      }
      if (empty || !(hi > lo)) continue;
      if (!std::isfinite(hi - lo)) throw NumericalError("solve_minkowski: unbounded polytope");
      if (face) (*face)(j) = hi - lo;
      if (ridge) {
        (*ridge)(s.ids[j], s.ids[jlo]) += 1.0;
        (*ridge)(s.ids[j], s.ids[jhi]) += 1.0;
      }
      area += bj * (hi - lo);
      if (vertices) {
        const Eigen::Vector2d p0(bj * ax, bj * ay), t(tx, ty);
        vertices->push_back(s.origin + s.basis * (p0 + lo * t));
        vertices->push_back(s.origin + s.basis * (p0 + hi * t));
      }
    }
    return area / 2.0;
  }
  double vol = 0.0;
  HSystem sub;
  Vec subface;
  for (int i = 0; i < m; ++i) {
    if (!restrict_to_face(s, i, tol, sub)) continue;
    const double f = hvolume(sub, tol, ridge ? &subface : nullptr, nullptr, vertices);
    if (face) (*face)(i) = f;
    if (ridge)
      for (int l = 0; l < subface.size(); ++l) (*ridge)(s.ids[i], sub.ids[l]) += subface(l);
    vol += s.b(i) * f;
  }
  return vol / k;
}

struct Evaluation {
  bool ok = false;
  double volume = 0.0;
  Vec area;
  Mat hessian;  // d^2 vol / dh_i dh_j
};

/// Volume and facet measures of P(h) = {x : <u_i, x> <= h_i} from the
/// inequalities alone. The Hessian uses d A_i / d h_j = |F_i cap F_j| / sin(theta_ij)
/// for adjacent facets and d A_i / d h_i = -sum_j cos(theta_ij) |F_i cap F_j| / sin(theta_ij).
Evaluation evaluate(const Mat& u, const Vec& h, bool with_hessian) {
  Evaluation ev;
  const int d = static_cast<int>(u.rows());
  const int n = static_cast<int>(u.cols());
  HSystem s{u.transpose(), h, {}, Vec::Zero(d), Mat::Identity(d, d)};
  for (int i = 0; i < n; ++i) s.ids.push_back(i);
  const double tol = 1e-12 * h.cwiseAbs().maxCoeff();
  Mat ridge;
  if (with_hessian) ridge = Mat::Zero(n, n);
  ev.volume = hvolume(s, tol, &ev.area, with_hessian ? &ridge : nullptr, nullptr);
  if (!(ev.volume > 0.0) || !std::isfinite(ev.volume)) return ev;
  if (with_hessian) {
    ev.hessian = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || ridge(i, j) == 0.0) continue;
        // each ridge is seen from both facets
        const double r = 0.5 * (ridge(i, j) + ridge(j, i));
        const double cs = u.col(i).dot(u.col(j));
        const double w = r / std::sqrt(std::max(1.0 - cs * cs, 1e-300));
        ev.hessian(i, j) = w;
        ev.hessian(i, i) -= cs * w;
      }
    }
  }
  ev.ok = true;
  return ev;
}

// Vertices of P(h) near a non-simple vertex come out as a tight cluster.
PointList merge_close(const PointList& pts, double tol) {
  PointList out;
  std::vector<int> count;
  for (const auto& x : pts) {
    size_t j = 0;
    while (j < out.size() && (out[j] / count[j] - x).cwiseAbs().maxCoeff() > tol) ++j;
    if (j == out.size()) {
      out.push_back(x);
      count.push_back(1);
    } else {
      out[j] += x;
      ++count[j];
    }
  }
  for (size_t j = 0; j < out.size(); ++j) out[j] /= count[j];
  return out;
}

PointList vertices_of(const Mat& u, const Vec& h) {
  const int d = static_cast<int>(u.rows());
  HSystem s{u.transpose(), h, {}, Vec::Zero(d), Mat::Identity(d, d)};
  for (int i = 0; i < u.cols(); ++i) s.ids.push_back(i);
  PointList v;
  hvolume(s, 1e-12 * h.cwiseAbs().maxCoeff(), nullptr, nullptr, &v);
  return v;
}

Vec mean(const PointList& pts) {
  Vec c = Vec::Zero(pts.front().size());
  for (const auto& x : pts) c += x;
  return c / static_cast<double>(pts.size());
}

}  // namespace

MinkowskiSolution solve_minkowski_detailed(const DiscreteMeasure& rho, const MinkowskiOptions& opt) {
  const int d = rho.dim();
  if (d < 2) throw InvalidArgument("solve_minkowski: dimension must be at least 2");
  if (rho.empty()) throw InvalidArgument("solve_minkowski: empty measure");
  const auto atoms = merge_atoms(rho.atoms());
  const Mat u = directions(atoms, d);
  const Vec a_in = weights(atoms);
  const double mass = a_in.sum();
  if ((u * a_in).norm() > 1e-9 * mass) throw InvalidArgument("solve_minkowski: measure is not centered");
  Eigen::JacobiSVD<Mat> svd(u);
  const auto& sv = svd.singularValues();
  if (sv.size() < d || sv(d - 1) <= 1e-9 * sv(0))
    throw InvalidArgument("solve_minkowski: atom directions do not span");

  // work with total mass d; the answer scales by t^{1/(d-1)}
  const double t = mass / d;
  const Vec a = a_in / t;
  const int n = static_cast<int>(a.size());
  const double amax = a.maxCoeff();

  // orthonormal basis of the complement of the translations h -> h + U^T x
  Eigen::JacobiSVD<Mat> full(u.transpose(), Eigen::ComputeFullU);
  const Mat basis = full.matrixU().rightCols(n - d);

  auto objective = [&](const Vec& h, const Evaluation& ev) { return a.dot(h) - std::log(ev.volume); };
  auto gradient = [&](const Evaluation& ev) -> Vec { return a - ev.area / ev.volume; };
  auto residual = [&](const Evaluation& ev) { return (ev.area / ev.volume - a).cwiseAbs().maxCoeff() / amax; };

  Vec h = Vec::Ones(n);
  Evaluation ev = evaluate(u, h, true);
  if (!ev.ok) throw SolverError("solve_minkowski: initial polytope is degenerate");

  MinkowskiSolution sol;
  double e = objective(h, ev);
  sol.objective.push_back(e);
  // Newton converges fast near the minimum; polishing well past the requested
  // tolerance collapses the vertex clusters of near non-simple vertices
  const double target = std::min(opt.tol, 1e-11);
  int it = 0;
  for (; it < opt.max_iterations && residual(ev) > target; ++it) {
    const Vec g = gradient(ev);
    // projected Newton step for E(h) = <a, h> - log vol; atoms without a facet
    // have no curvature and get a damping term instead
    Mat hess = -ev.hessian / ev.volume + ev.area * ev.area.transpose() / (ev.volume * ev.volume);
    const double top = std::max(hess.diagonal().cwiseAbs().maxCoeff(), 1e-300);
    for (int i = 0; i < n; ++i) hess(i, i) += (ev.area(i) > 0.0 ? 1e-10 : 1e-6) * top;
    const Mat red = basis.transpose() * hess * basis;
    const Vec rg = basis.transpose() * g;
    Eigen::LDLT<Mat> ldlt(red);
    std::vector<Vec> steps;
    if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
      Vec p = -basis * ldlt.solve(rg);
      if (p.allFinite() && g.dot(p) < 0.0) steps.push_back(p);
    }
    // steepest descent as the fallback, scaled to a tenth of the support numbers
    const Vec sd = -basis * rg;
    steps.push_back(sd * (0.1 * h.cwiseAbs().maxCoeff() / std::max(sd.cwiseAbs().maxCoeff(), 1e-300)));

    bool accepted = false;
    Vec hn;
    Evaluation evn;
    for (const Vec& p : steps) {
      const double slope = g.dot(p);
      double alpha = 1.0;
      for (int k = 0; k < 60 && !accepted; ++k, alpha *= 0.5) {
        hn = h + alpha * p;
        evn = evaluate(u, hn, false);
        if (!evn.ok) continue;
        // by convexity a non-positive slope at the trial point also means
        // descent; this survives rounding in the objective near the minimum
        accepted = objective(hn, evn) <= e + 1e-4 * alpha * slope || gradient(evn).dot(p) <= 0.0;
      }
      if (accepted) break;
    }
    if (!accepted) break;
    // drop redundant inequalities onto P(h), which lowers E without moving P,
    // and recenter at the mean of the vertex list, an interior point
    const PointList verts = vertices_of(u, hn);
    for (int i = 0; i < n; ++i) {
      double sup = -std::numeric_limits<double>::infinity();
      for (const auto& x : verts) sup = std::max(sup, u.col(i).dot(x));
      hn(i) = std::min(hn(i), sup);
    }
    hn -= u.transpose() * mean(verts);
    h = hn;
    ev = evaluate(u, h, true);
    e = objective(h, ev);
    sol.objective.push_back(e);
  }
  sol.iterations = it;
  sol.residual = residual(ev);
  if (sol.residual > opt.tol)
    throw SolverError("solve_minkowski: no convergence after " + std::to_string(it) +
                      " iterations (residual " + std::to_string(sol.residual) + ")");

  sol.h = std::pow(t / ev.volume, 1.0 / (d - 1)) * h;
  const PointList v = vertices_of(u, sol.h);
  double r = 0.0;
  for (const auto& x : v) r = std::max(r, x.cwiseAbs().maxCoeff());
  Polytope body = Polytope::from_points(merge_close(v, 1e-8 * r));
  const Vec x = body.vertex_centroid();
  sol.h -= u.transpose() * x;
  sol.body = translate(body, -x);
  sol.facet_measures = evaluate(u, sol.h, false).area;
  return sol;
}

Polytope solve_minkowski(const DiscreteMeasure& rho, const MinkowskiOptions& opt) {
  return solve_minkowski_detailed(rho, opt).body;
}

double round_trip_residual(const DiscreteMeasure& rho, const Polytope& p, double angle_tol) {
  const auto& atoms = rho.atoms();
  double amax = 0.0;
  for (const auto& at : atoms) amax = std::max(amax, at.a);
  if (amax == 0.0) return 0.0;
  std::vector<double> got(atoms.size(), 0.0);
  double worst = 0.0;
  for (const auto& f : p.facets()) {
    bool matched = false;
    for (size_t i = 0; i < atoms.size(); ++i) {
      if ((atoms[i].u - f.normal).norm() <= angle_tol) {
        got[i] += f.measure;
        matched = true;
        break;
      }
    }
    if (!matched) worst = std::max(worst, f.measure);
  }
  for (size_t i = 0; i < atoms.size(); ++i) worst = std::max(worst, std::abs(got[i] - atoms[i].a));
  return worst / amax;
}

DiscreteMeasure random_admissible_measure(int d, int index, Rng& rng) {
  switch (index % 3) {
    case 0:
      return surface_area_measure(random_simplex(d, rng));
    case 1:
      return surface_area_measure(random_hull(d, 2 * d + 4, rng));
    default: {
      std::uniform_real_distribution<double> w(0.5, 1.5);
      while (true) {
        std::vector<Atom> atoms;
        for (int i = 0; i < 2 * d + 4; ++i) atoms.push_back({random_unit_vector(d, rng), w(rng)});
        try {
          return balance_measure(DiscreteMeasure(d, std::move(atoms)), 0);
        } catch (const NumericalError&) {
        }
      }
    }
  }
}

CheckReport round_trip_suite(const SuiteOptions& opt) {
  const int d = 2 * opt.m;
  CheckReport rep("minkowski-round-trip", opt.tol.value_or(1e-6));
  rep.m = opt.m;
  rep.seed = opt.seed;
  MinkowskiOptions mo;
  mo.tol = 0.1 * rep.tol;
  static const char* kinds[] = {"simplex", "hull", "balanced"};
  for (int i = 0; i < opt.instances; ++i) {
    const std::uint64_t seed = instance_seed(opt.seed, i);
    Rng rng(seed);
    const DiscreteMeasure rho = random_admissible_measure(d, i, rng);
    InstanceResult r;
    r.label = std::to_string(i) + ":" + kinds[i % 3];
    r.seed = seed;
    try {
      const auto sol = solve_minkowski_detailed(rho, mo);
      r.rel_residual = r.abs_residual = round_trip_residual(rho, sol.body);
      r.pass = r.rel_residual <= rep.tol;
      r.note = std::to_string(sol.iterations) + " iterations";
    } catch (const SolverError& ex) {
      r.rel_residual = r.abs_residual = std::numeric_limits<double>::infinity();
      r.pass = false;
      r.note = ex.what();
    }
    rep.add(std::move(r));
  }
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport step2_limit_experiment(cdouble z1, cdouble z2, const PlanarBody& c, int l_max, const ComplexSpace& space,
                                   int dirs) {
  const int m = space.m();
  if (m < 2) throw InvalidArgument("step2 experiment: m must be at least 2");
  if (l_max < 1) throw InvalidArgument("step2 experiment: l_max must be positive");
  const int d = space.real_dim();
  const cdouble z3 = -z1 - z2;
  Eigen::VectorXcd w1 = Eigen::VectorXcd::Zero(m), w2 = w1, w3 = w1;
  w1(0) = std::conj(z1);
  w1(1) = std::conj(z2);
  w2(0) = std::conj(z2);
  w2(1) = std::conj(z1);
  w3(0) = std::conj(z3);
  w3(1) = std::conj(z3);
  const PointList w = {space.from_complex(w1), space.from_complex(w2), space.from_complex(w3)};

  std::vector<Atom> atoms;
  for (const auto& wj : w)
    if (wj.norm() > 0.0) atoms.push_back({wj, wj.norm()});
  const DiscreteMeasure rho(d, merge_atoms(std::move(atoms)), true);

  auto target = [&](const Vec& x) {
    const Vec jx = space.i_times(x);
    double s = 0.0;
    for (const auto& wj : w) s += c.support(wj.dot(x), wj.dot(jx));
    return s / d;
  };
  const auto test = comparison_directions(space, dirs, rho.atoms());
  double scale = 1.0;
  for (const auto& x : test) scale = std::max(scale, std::abs(target(x)));

  CheckReport rep("step2-limit", std::numeric_limits<double>::infinity());
  rep.m = m;
  const double ref = std::max(1.0, rho.total_mass());
  double prev = std::numeric_limits<double>::infinity();
  for (int l = 1; l <= l_max; ++l) {
    const double eps = ref * std::pow(0.25, l) / (2 * d);
    const DiscreteMeasure rho_l = balance_measure(rho, 1, eps);
    const auto sol = solve_minkowski_detailed(rho_l);
    const auto pb = projection_body(sol.body, c, space);
    double res = 0.0;
    for (const auto& x : test) res = std::max(res, std::abs(pb.support(x) - target(x)));
    InstanceResult r;
    r.label = "l=" + std::to_string(l);
    r.abs_residual = res;
    r.rel_residual = res / scale;
    r.pass = res < prev;
    char buf[64];
    std::snprintf(buf, sizeof buf, "eps=%.3g iterations=%d", eps, sol.iterations);
    r.note = buf;
    rep.add(std::move(r));
    prev = res;
  }
  return rep;
}

}  // namespace cpb
