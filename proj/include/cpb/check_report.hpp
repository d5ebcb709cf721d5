#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace cpb {

/// Relative residual |lhs - rhs| / max(1, |lhs|, |rhs|).
double relative_residual(double lhs, double rhs);

struct InstanceResult {
  std::string label;
  std::uint64_t seed = 0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double slack = std::numeric_limits<double>::quiet_NaN();  // inequalities only
  bool equality = false;                                    // slack within the equality tolerance
  bool pass = true;
  std::string note;
};

/// Outcome of one certification run over one or more instances.
/// pass <=> max_rel <= tol (inequalities record the violation -min(slack, 0)
/// as residual, so the same rule applies).
class CheckReport {
 public:
  CheckReport() = default;
  CheckReport(std::string name, double tol) : name(std::move(name)), tol(tol) {}

  std::string name;
  double tol = 0.0;
  int m = 0;
  std::uint64_t seed = 0;
  std::string shape;  // label of the planar body C
  double max_abs = 0.0;
  double max_rel = 0.0;
  double min_slack = std::numeric_limits<double>::quiet_NaN();
  /// Extra error allowance from the ball approximant, already included in the verdicts.
  double ball_bound = 0.0;
  std::vector<InstanceResult> details;
  std::vector<std::string> notes;

  int instances() const { return static_cast<int>(details.size()); }
  bool pass() const;

  /// Residual-type instance; passes if rel <= tol.
  InstanceResult& add_residual(std::string label, double lhs, double rhs, std::uint64_t seed = 0);
  /// Inequality instance lhs >= rhs with relative slack; passes if slack >= -(tol + allowance).
  InstanceResult& add_inequality(std::string label, double lhs, double rhs, double allowance = 0.0,
                                 double eq_tol = 1e-6, std::uint64_t seed = 0);
  InstanceResult& add(InstanceResult r);
  /// Folds another report's instances into this one.
  void merge(const CheckReport& other, const std::string& prefix = "");

  static std::string csv_header();
  std::string csv_row() const;
  /// JSON text with the summary and per-instance details.
  std::string to_json(int indent = 2) const;
};

}  // namespace cpb
