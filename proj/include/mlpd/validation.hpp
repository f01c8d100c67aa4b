#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlpd/mellin_barnes.hpp"
#include "mlpd/param_deriv.hpp"

namespace mlpd {

struct PointSpec {
  ParameterSet params;
  std::optional<ParamTarget> target;  // derivative point when set
  cplx z{};
};

std::string describe(const PointSpec& point);

enum class FdDirection { real_axis, imag_axis };

// Central difference [F(theta+h) - F(theta-h)] / (2h) along the target
// parameter, with the series evaluated at rel_tol/100. The imaginary-axis
// direction supports the Cauchy-Riemann (analyticity) checks.
cplx central_fd(const ParameterSet& p, ParamTarget target, const cplx& z,
                double h, FdDirection dir = FdDirection::real_axis);

struct EvalRequest {
  PointSpec point;
  Method method_a = Method::series;
  Method method_b = Method::mellin_barnes;
  TruncationPolicy policy{};
  ContourSpec contour{};
  double fd_h = 1e-5;
};

struct ComparisonReport {
  PointSpec point;
  Method method_a = Method::series;
  Method method_b = Method::mellin_barnes;
  cplx value_a{}, value_b{};
  double abs_diff = 0.0;
  double budget = 0.0;  // 1e-8 + 10 (err_est_a + err_est_b)
  bool pass = false;
  std::string error;  // non-empty when a pathway failed; the report fails
};

// Runs every request even if some fail; errors surface as failed reports.
std::vector<ComparisonReport> compare_methods(
    const std::vector<EvalRequest>& requests);

Evaluation evaluate_by_method(const PointSpec& point, Method method,
                              const TruncationPolicy& policy,
                              const ContourSpec& contour, double fd_h);

// ---- audit bundle ----------------------------------------------------------

struct AuditRecord {
  std::string descriptor;
  double margin = 0.0;
  bool pass = false;
};

struct AuditSection {
  std::string name;
  std::vector<AuditRecord> records;
  bool pass = false;
};

struct AuditConfig {
  std::vector<std::string> audits;  // empty config given explicitly is allowed
  unsigned long long seed = 42;
  long radius_k_max = 10000;
};

struct AuditBundle {
  std::string suite;
  unsigned long long seed = 42;
  std::vector<AuditSection> sections;
  bool pass = true;
};

std::vector<std::string> default_audit_names();

// Deterministic given (audits, seed). Unknown audit names are a ConfigError.
AuditBundle run_full_audit(const AuditConfig& config);

// One record per line: audit name, point descriptor, margin, pass.
void write_bundle(std::ostream& os, const AuditBundle& bundle);

// The designated parameter points used by the radius-of-convergence witness:
// every base family and every (family, target) derivative sequence.
struct RadiusCase {
  ParameterSet params;
  std::optional<ParamTarget> target;
  bool require_threshold = true;  // max ratio must exceed 1e6
};
std::vector<RadiusCase> radius_witness_cases();

// Eventual monotone growth: true when the ratio sequence increases from some
// index onward (and that index is not in the last half of the sequence).
bool eventually_increasing(const std::vector<double>& ratios,
                           size_t* tail_start = nullptr);

}  // namespace mlpd
