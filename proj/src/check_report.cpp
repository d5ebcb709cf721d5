#include "cpb/check_report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cpb {

double relative_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

bool CheckReport::pass() const {
  for (const auto& d : details)
    if (!d.pass) return false;
  return max_rel <= tol || details.empty();
}

InstanceResult& CheckReport::add(InstanceResult r) {
  if (!std::isfinite(r.rel_residual)) r.pass = false;
  max_abs = std::max(max_abs, r.abs_residual);
  max_rel = std::max(max_rel, r.rel_residual);
  if (!std::isnan(r.slack)) min_slack = std::isnan(min_slack) ? r.slack : std::min(min_slack, r.slack);
  details.push_back(std::move(r));
  return details.back();
}

InstanceResult& CheckReport::add_residual(std::string label, double lhs, double rhs, std::uint64_t s) {
  InstanceResult r;
  r.label = std::move(label);
  r.seed = s;
  r.abs_residual = std::abs(lhs - rhs);
  r.rel_residual = relative_residual(lhs, rhs);
  r.pass = r.rel_residual <= tol;
  return add(std::move(r));
}

InstanceResult& CheckReport::add_inequality(std::string label, double lhs, double rhs, double allowance,
                                            double eq_tol, std::uint64_t s) {
  InstanceResult r;
  r.label = std::move(label);
  r.seed = s;
  const double denom = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  r.slack = (lhs - rhs) / denom;
  r.abs_residual = std::max(0.0, rhs - lhs);
  // the allowance widens the tolerance for this instance only
  r.rel_residual = std::max(0.0, -r.slack - allowance);
  r.equality = std::abs(r.slack) <= eq_tol;
  r.pass = r.rel_residual <= tol && std::isfinite(r.slack);
  return add(std::move(r));
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (auto r : other.details) {
    r.label = prefix + r.label;
    add(std::move(r));
  }
  ball_bound = std::max(ball_bound, other.ball_bound);
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

std::string CheckReport::csv_header() { return "name,seed,m,C,residual,slack,tol,pass"; }

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

std::string CheckReport::csv_row() const {
  return name + "," + std::to_string(seed) + "," + std::to_string(m) + "," + shape + "," + num(max_rel) + "," +
         num(min_slack) + "," + num(tol) + "," + (pass() ? "true" : "false");
}

std::string CheckReport::to_json(int indent) const {
  using nlohmann::json;
  auto opt = [](double x) { return std::isnan(x) ? json(nullptr) : json(x); };
  json j;
  j["name"] = name;
  j["seed"] = seed;
  j["m"] = m;
  j["C"] = shape;
  j["instances"] = instances();
  j["max_abs_residual"] = max_abs;
  j["max_rel_residual"] = max_rel;
  j["min_slack"] = opt(min_slack);
  j["tol"] = tol;
  j["ball_bound"] = ball_bound;
  j["pass"] = pass();
  j["notes"] = notes;
  json arr = json::array();
  for (const auto& d : details) {
    arr.push_back({{"label", d.label},
                   {"seed", d.seed},
                   {"abs_residual", d.abs_residual},
                   {"rel_residual", d.rel_residual},
                   {"slack", opt(d.slack)},
                   {"equality", d.equality},
                   {"pass", d.pass},
                   {"note", d.note}});
  }
  j["details"] = arr;
  return j.dump(indent);
}

}  // namespace cpb
