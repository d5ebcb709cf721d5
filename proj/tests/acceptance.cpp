// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status 0 iff all pass. `acceptance N` runs criterion N only.

#include "cpb/dim2.hpp"
#include "cpb/inequalities.hpp"
#include "cpb/minkowski_solver.hpp"
#include "cpb/properties.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace cpb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

SuiteOptions suite(int m, int instances, std::uint64_t seed) {
  SuiteOptions o;
  o.m = m;
  o.instances = instances;
  o.seed = seed;
  return o;
}

Outcome summary(const CheckReport& r) {
  return {r.pass(), std::to_string(r.instances()) + " instances, max rel " + fmt("%.3g (tol %.3g)", r.max_rel, r.tol)};
}

// the first failing instance, if any
std::string first_failure(const CheckReport& r) {
  for (const auto& d : r.details)
    if (!d.pass) return "; failed " + d.label + (d.note.empty() ? "" : " (" + d.note + ")");
  return "";
}

bool has_note(const CheckReport& r, const std::string& note) {
  for (const auto& d : r.details)
    if (d.note.find(note) != std::string::npos && d.pass) return true;
  return false;
}

Outcome two_path() {
  const auto t0 = std::chrono::steady_clock::now();
  const CheckReport r = two_path_suite(suite(3, 50, 101));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o = summary(r);
  o.pass = o.pass && secs < 300.0;
  o.detail += fmt(", %.1f s (limit 300 s)", secs) + first_failure(r);
  return o;
}

Outcome valuation() {
  const CheckReport r = valuation_suite(suite(3, 50, 102));
  Outcome o = summary(r);
  const bool tangent = has_note(r, "tangent cut");
  o.pass = o.pass && tangent;
  o.detail += tangent ? ", includes a facet-tangent cut" : ", no tangent cut exercised";
  o.detail += first_failure(r);
  return o;
}

Outcome contravariance() {
  SuiteOptions opt = suite(3, 50, 103);
  opt.dirs = 500;
  const CheckReport r = contravariance_suite(opt);
  Outcome o = summary(r);
  o.detail += ", 500 directions" + first_failure(r);
  return o;
}

Outcome symmetry() {
  const CheckReport r = symmetry_suite(suite(3, 20, 104));
  Outcome o = summary(r);
  o.detail += first_failure(r);
  return o;
}

Outcome bm() {
  const CheckReport r = bm_suite(suite(2, 100, 105));
  Outcome o = summary(r);
  const bool eq = has_note(r, "homothetic"), strict = has_note(r, "cube vs simplex");
  o.pass = o.pass && eq && strict;
  o.detail = std::to_string(r.instances()) + " instances, min slack " + fmt("%.3g", r.min_slack) +
             (eq ? ", homothetic equality" : ", no homothetic case") + (strict ? ", strict cube vs simplex" : "") +
             first_failure(r);
  return o;
}

Outcome af_minkowski() {
  const SuiteOptions opt = suite(2, 100, 106);
  SuiteOptions small = suite(2, 10, 106);
  const CheckReport af0 = af_suite(opt, 0, 2);
  const CheckReport mt0 = minkowski_type_suite(opt, 0);
  const CheckReport af1 = af_suite(small, 1, 2);
  const CheckReport mt1 = minkowski_type_suite(small, 1);
  Outcome o;
  o.pass = af0.pass() && mt0.pass() && af1.pass() && mt1.pass();
  o.detail = "af i=0: " + std::to_string(af0.instances()) + fmt(" min slack %.3g", af0.min_slack) +
             "; minkowski-type i=0: " + std::to_string(mt0.instances()) + fmt(" min slack %.3g", mt0.min_slack) +
             "; i=1 interval checks " + (af1.pass() && mt1.pass() ? "pass" : "fail") +
             fmt(" (ball bound %.3g)", std::max(af1.ball_bound, mt1.ball_bound));
  for (const auto* r : {&af0, &mt0, &af1, &mt1}) o.detail += first_failure(*r);
  return o;
}

Outcome proportionality() {
  SuiteOptions opt = suite(3, 3, 107);
  const CheckReport r = proportionality_suite(opt);
  Outcome o;
  // the interval bound alone is loose at the default B_N, so the spread target is enforced too
  o.pass = r.pass() && r.max_rel <= 0.02;
  o.detail = fmt("ratio spread %.3g within ball bound %.3g", r.max_rel, r.tol) +
             (r.max_rel <= 0.02 ? ", below the 2% target" : ", above the 2% target") + first_failure(r);
  return o;
}

Outcome minkowski() {
  SuiteOptions opt = suite(2, 20, 108);
  const CheckReport rt = round_trip_suite(opt);
  const ComplexSpace space(2);
  const PlanarBody c = PlanarBody::unit_square();
  const CheckReport s1 = step2_limit_experiment({0.7, 0.3}, {-0.2, 1.1}, c, 5, space);
  const CheckReport s2 = step2_limit_experiment({1.0, 0.0}, {0.0, 0.0}, c, 5, space);
  Outcome o;
  o.pass = rt.pass() && s1.pass() && s2.pass();
  o.detail = std::to_string(rt.instances()) + " round trips, max rel " + fmt("%.3g (tol %.3g)", rt.max_rel, rt.tol) +
             "; step-2 residuals";
  for (const auto& d : s1.details) o.detail += fmt(" %.3g", d.abs_residual);
  o.detail += s1.pass() ? " decreasing" : " not decreasing";
  o.detail += s2.pass() ? ", degenerate data decreasing" : ", degenerate data not decreasing";
  for (const auto* r : {&rt, &s1, &s2}) o.detail += first_failure(*r);
  return o;
}

Outcome dim2() {
  SuiteOptions opt = suite(2, 20, 109);
  opt.tol = 1e-7;
  const CheckReport val = dim2_valuation_suite(opt);
  const CheckReport con = dim2_contravariance_suite(opt);
  opt.tol = 1e-6;
  const CheckReport hom = dim2_homogeneity_suite(opt);
  double z = 0.0, pi = 0.0;
  for (const auto& d : hom.details) {
    double& worst = d.label.find("Z degree") != std::string::npos ? z : pi;
    worst = std::max(worst, d.abs_residual);
  }
  Outcome o;
  o.pass = val.pass() && con.pass() && hom.pass();
  o.detail = fmt("valuation %.3g, contravariance %.3g (tol 1e-7); ", val.max_rel, con.max_rel) +
             fmt("|slope - 1| <= %.3g for Z, |slope - 3| <= %.3g for Pi_C (tol 1e-6)", z, pi);
  for (const auto* r : {&val, &con, &hom}) o.detail += first_failure(*r);
  return o;
}

Outcome c_translation() {
  const CheckReport r = c_translation_suite(suite(3, 20, 110));
  Outcome o = summary(r);
  o.detail += first_failure(r);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"two-path identity (m=3)", two_path},
      {"valuation property (m=3)", valuation},
      {"SL(3,C) contravariance", contravariance},
      {"symmetry of mixed projection bodies (m=3)", symmetry},
      {"Brunn-Minkowski type inequality", bm},
      {"Aleksandrov-Fenchel and Minkowski type inequalities", af_minkowski},
      {"W_{2m-1}(Pi_C K) proportional to W_1(K) (m=3)", proportionality},
      {"Minkowski solver round trip and limit experiment (R^4)", minkowski},
      {"m=2 valuation of degree one", dim2},
      {"C-translation invariance", c_translation},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all = true;
  for (size_t n = 0; n < criteria.size(); ++n) {
    if (only > 0 && static_cast<int>(n) + 1 != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu %s  %s: %s [%.1f s]\n", n + 1, o.pass ? "PASS" : "FAIL", criteria[n].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
