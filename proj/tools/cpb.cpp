// Command-line front end: geometry commands read JSON and write JSON,
// checks write one CSV row (or the JSON report) per run.

#include "cpb/dim2.hpp"
#include "cpb/inequalities.hpp"
#include "cpb/io.hpp"
#include "cpb/minkowski_solver.hpp"
#include "cpb/properties.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace cpb;

namespace {

constexpr int kExitFail = 2;
constexpr int kExitInput = 3;
constexpr int kExitSolver = 4;

struct Common {
  int m = 3;
  std::string shape;
  std::uint64_t seed = 1;
  int dirs = 500;
  double tol = -1.0;
  int ball_n = 32;
  std::string out = "json";
  int instances = 10;
  int points = 0;
  int i = 0;
  int k = 2;
};

Shape load_shape(const std::string& arg) {
  if (arg.empty()) return builtin_shape("square");
  if (arg.rfind("builtin:", 0) == 0) return builtin_shape(arg.substr(8));
  return {planar_from_json(load_json(arg)), arg};
}

SuiteOptions suite_options(const Common& c) {
  SuiteOptions o;
  o.m = c.m;
  o.seed = c.seed;
  o.instances = c.instances;
  o.dirs = c.dirs;
  if (c.tol > 0) o.tol = c.tol;
  if (!c.shape.empty()) o.shape = load_shape(c.shape);
  o.points = c.points;
  o.ball_n = c.ball_n;
  return o;
}

const std::vector<std::string> kChecks{"valuation", "contravariance", "symmetry",        "bm",
                                       "af",        "minkowski-type", "classical",       "proportionality",
                                       "c-translation", "dim2",       "two-path",        "round-trip"};

CheckReport run_check(const std::string& kind, const Common& c) {
  const SuiteOptions o = suite_options(c);
  if (kind == "valuation") return valuation_suite(o);
  if (kind == "contravariance") return contravariance_suite(o);
  if (kind == "symmetry") return symmetry_suite(o);
  if (kind == "bm") return bm_suite(o);
  if (kind == "af") return af_suite(o, c.i, c.k);
  if (kind == "minkowski-type") return minkowski_type_suite(o, c.i);
  if (kind == "classical") return classical_suite(o, c.i);
  if (kind == "proportionality") return proportionality_suite(o);
  if (kind == "c-translation") return c_translation_suite(o);
  if (kind == "dim2") return dim2_suite(o);
  if (kind == "two-path") return two_path_suite(o);
  if (kind == "round-trip") return round_trip_suite(o);
  throw InvalidArgument("unknown check '" + kind + "'");
}

void emit(const CheckReport& r, const std::string& out, bool header) {
  if (out == "csv") {
    if (header) std::cout << CheckReport::csv_header() << "\n";
    std::cout << r.csv_row() << "\n";
  } else {
    std::cout << r.to_json() << "\n";
  }
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Polytope> load_bodies(const std::vector<std::string>& files) {
  std::vector<Polytope> bodies;
  for (const auto& f : files) bodies.push_back(polytope_from_json(load_json(f), true));
  return bodies;
}

ComplexSpace space_for(int dim) {
  if (dim % 2 != 0) throw InvalidArgument("bodies must live in R^2m");
  return ComplexSpace(dim / 2);
}

Polytope generate(const std::string& kind, const Common& c) {
  const int d = 2 * c.m;
  Rng rng(c.seed);
  if (kind == "simplex") return random_simplex(d, rng);
  if (kind == "standard-simplex") return standard_simplex(d);
  if (kind == "cube") return cube(d);
  if (kind == "cross") return cross_polytope(d);
  if (kind == "hull") return random_hull(d, c.points > 0 ? c.points : d + 6, rng);
  throw InvalidArgument("unknown kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex projection bodies of polytopes"};
  app.require_subcommand(1);
  Common c;
  auto common = [&c](CLI::App* s) {
    s->add_option("--m", c.m, "complex dimension");
    s->add_option("--C", c.shape, "planar body: JSON file or builtin:point|segment|square|disk64");
    s->add_option("--seed", c.seed, "random seed");
    s->add_option("--dirs", c.dirs, "test directions per instance");
    s->add_option("--tol", c.tol, "tolerance override");
    s->add_option("--ball-N", c.ball_n, "ball approximant resolution");
    s->add_option("--out", c.out, "output format")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--instances", c.instances, "random instances per check");
    s->add_option("--points", c.points, "points per random hull");
    s->add_option("--i", c.i, "ball slots for quermassintegral checks");
    s->add_option("--k", c.k, "bodies in the Aleksandrov-Fenchel check");
  };

  std::string file;
  std::vector<std::string> files;

  auto* hull = app.add_subcommand("hull", "convex hull of the vertices in a polytope JSON");
  hull->add_option("file", file)->required();
  auto* vol = app.add_subcommand("volume", "volume of a polytope JSON");
  vol->add_option("file", file)->required();
  auto* mv = app.add_subcommand("mixed-volume", "V(K_1, ..., K_d) of d polytope JSON files");
  mv->add_option("files", files)->required();
  auto* pb = app.add_subcommand("projection-body", "Pi_C K with trace");
  pb->add_option("file", file)->required();
  common(pb);
  auto* mpb = app.add_subcommand("mixed-projection-body", "Pi_C(K_1, ..., K_{2m-1}) with trace");
  mpb->add_option("files", files)->required();
  common(mpb);
  auto* sm = app.add_subcommand("solve-minkowski", "polytope with a given surface area measure");
  sm->add_option("file", file)->required();
  double solve_tol = 1e-6;
  sm->add_option("--tol", solve_tol, "relative facet-measure residual");
  std::string kind;
  auto* check = app.add_subcommand("check", "run a seeded property check");
  check->add_option("kind", kind)->required()->check(CLI::IsMember(kChecks));
  common(check);
  std::vector<std::string> sweep_checks{"valuation", "contravariance", "c-translation"};
  std::uint64_t seed_to = 5;
  auto* sweep = app.add_subcommand("sweep", "checks over a seed range, CSV output");
  common(sweep);
  sweep->add_option("--checks", sweep_checks, "checks to run")->check(CLI::IsMember(kChecks));
  sweep->add_option("--seed-to", seed_to, "last seed (inclusive); --seed is the first");
  auto* gen = app.add_subcommand("generate", "seeded polytope in R^2m");
  gen->add_option("--kind", kind, "simplex|standard-simplex|cube|cross|hull")->required();
  common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*hull) {
      print(to_json(polytope_from_json(load_json(file), true)));
    } else if (*vol) {
      print(Json{{"volume", polytope_from_json(load_json(file), true).volume()}});
    } else if (*mv) {
      const auto bodies = load_bodies(files);
      if (static_cast<int>(bodies.size()) != bodies.front().dim())
        throw InvalidArgument("mixed-volume: need exactly d bodies in R^d");
      print(Json{{"mixed_volume", mixed_volume(bodies)}});
    } else if (*pb) {
      const Polytope k = polytope_from_json(load_json(file), true);
      print(to_json(projection_body(k, load_shape(c.shape).body, space_for(k.dim()))));
    } else if (*mpb) {
      const auto bodies = load_bodies(files);
      print(to_json(mixed_projection_body(bodies, load_shape(c.shape).body, space_for(bodies.front().dim()))));
    } else if (*sm) {
      const DiscreteMeasure rho = measure_from_json(load_json(file));
      MinkowskiOptions opt;
      opt.tol = solve_tol;
      const auto sol = solve_minkowski_detailed(rho, opt);
      Json j = to_json(sol.body);
      j["residual"] = round_trip_residual(rho, sol.body);
      j["iterations"] = sol.iterations;
      print(j);
    } else if (*check) {
      const CheckReport r = run_check(kind, c);
      emit(r, c.out, true);
      return r.pass() ? 0 : kExitFail;
    } else if (*sweep) {
      bool ok = true;
      std::cout << CheckReport::csv_header() << "\n";
      for (std::uint64_t s = c.seed; s <= seed_to; ++s) {
        Common one = c;
        one.seed = s;
        for (const auto& name : sweep_checks) {
          const CheckReport r = run_check(name, one);
          std::cout << r.csv_row() << "\n";
          ok = ok && r.pass();
        }
      }
      return ok ? 0 : kExitFail;
    } else if (*gen) {
      print(to_json(generate(kind, c)));
    }
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
