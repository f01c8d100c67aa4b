#include "mlpd/validation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "mlpd/format.hpp"
#include "mlpd/gamma_kernel.hpp"
#include "mlpd/rng.hpp"

namespace mlpd {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Evaluation fd_evaluation(const ParameterSet& p, ParamTarget target,
                         const cplx& z, double h) {
  if (!(h > 0.0)) throw DomainError("central_fd: h must be positive");
  const cplx delta(h, 0.0);
  ParameterSet plus = nudged(p, target, delta);
  ParameterSet minus = nudged(p, target, -delta);
  try {
    validate(plus);
    validate(minus);
  } catch (const DomainError&) {
    throw DomainError("central_fd: stencil leaves the valid parameter domain");
  }
  TruncationPolicy tight;
  tight.rel_tol = tight.rel_tol / 100.0;
  const Evaluation a = evaluate_series(plus, z, tight);
  const Evaluation b = evaluate_series(minus, z, tight);
  Evaluation ev;
  ev.method = Method::finite_difference;
  ev.value = (a.value - b.value) / (2.0 * h);
  // truncation model O(h^2) plus the propagated series tolerances
  ev.abs_err_est = (a.abs_err_est + b.abs_err_est) / (2.0 * h) +
                   h * h * std::max(1.0, std::abs(ev.value));
  ev.terms_used = a.terms_used + b.terms_used;
  ev.converged = a.converged && b.converged;
  ev.value_log = LogComplex::from_complex(ev.value);
  ev.log_abs_err = std::log(ev.abs_err_est);
  return ev;
}

}  // namespace

std::string describe(const PointSpec& point) {
  std::string s = describe(point.params);
  if (point.target) s += std::string(" target=") + to_string(*point.target);
  s += " z=" + format_complex(point.z);
  return s;
}

cplx central_fd(const ParameterSet& p, ParamTarget target, const cplx& z,
                double h, FdDirection dir) {
  if (!(h > 0.0)) throw DomainError("central_fd: h must be positive");
  if (dir == FdDirection::real_axis) return fd_evaluation(p, target, z, h).value;
  const cplx delta(0.0, h);
  ParameterSet plus = nudged(p, target, delta);
  ParameterSet minus = nudged(p, target, -delta);
  try {
    validate(plus);
    validate(minus);
  } catch (const DomainError&) {
    throw DomainError("central_fd: stencil leaves the valid parameter domain");
  }
  TruncationPolicy tight;
  tight.rel_tol = tight.rel_tol / 100.0;
  const Evaluation a = evaluate_series(plus, z, tight);
  const Evaluation b = evaluate_series(minus, z, tight);
  return (a.value - b.value) / cplx(0.0, 2.0 * h);
}

Evaluation evaluate_by_method(const PointSpec& point, Method method,
                              const TruncationPolicy& policy,
                              const ContourSpec& contour, double fd_h) {
  switch (method) {
    case Method::series:
      return point.target
                 ? evaluate_param_derivative(point.params, *point.target,
                                             point.z, policy)
                 : evaluate_series(point.params, point.z, policy);
    case Method::mellin_barnes:
      if (point.target) {
        const auto* m2 = std::get_if<Ml2>(&point.params);
        if (!m2)
          throw DomainError(
              "mellin-barnes derivatives are available for ml2 only");
        return mb_param_derivative(*m2, *point.target, point.z, contour);
      }
      return mb_evaluate(point.params, point.z, contour);
    case Method::finite_difference:
      if (!point.target)
        throw DomainError("finite-difference method requires a target");
      return fd_evaluation(point.params, *point.target, point.z, fd_h);
  }
  throw DomainError("unknown method");
}

std::vector<ComparisonReport> compare_methods(
    const std::vector<EvalRequest>& requests) {
  std::vector<ComparisonReport> reports;
  reports.reserve(requests.size());
  for (const EvalRequest& req : requests) {
    ComparisonReport rep;
    rep.point = req.point;
    rep.method_a = req.method_a;
    rep.method_b = req.method_b;
    try {
      const Evaluation a = evaluate_by_method(req.point, req.method_a,
                                              req.policy, req.contour, req.fd_h);
      const Evaluation b = evaluate_by_method(req.point, req.method_b,
                                              req.policy, req.contour, req.fd_h);
      rep.value_a = a.value;
      rep.value_b = b.value;
      rep.abs_diff = std::abs(a.value - b.value);
      rep.budget = 1e-8 + 10.0 * (a.abs_err_est + b.abs_err_est);
      rep.pass = rep.abs_diff <= rep.budget;
    } catch (const std::exception& e) {
      rep.pass = false;
      rep.error = e.what();
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::vector<std::string> default_audit_names() {
  return {"digamma-bounds", "uniform-majorant", "mb-decay", "radius-witness",
          "reflection"};
}

std::vector<RadiusCase> radius_witness_cases() {
  // alpha large enough that the ratio (alpha k)^alpha clears 1e6 within
  // k <= 1e4; the slower growth at alpha in {0.5, 1} is witnessed by the
  // monotone-only cases.
  const Ml2 m2{1.7, 1.0};
  const Ml3 m3{1.7, 1.0, 1.3};
  const Ml4 m4{1.0, 1.0, 0.7, 1.0};
  const Wright w{0.7, 1.0};
  const LeRoy lr{1.7, 1.0, 1.2};
  std::vector<RadiusCase> cases;
  cases.push_back({m2, std::nullopt, true});
  cases.push_back({m2, ParamTarget::alpha, true});
  cases.push_back({m2, ParamTarget::beta, true});
  cases.push_back({m3, std::nullopt, true});
  cases.push_back({m3, ParamTarget::alpha, true});
  cases.push_back({m3, ParamTarget::beta, true});
  cases.push_back({m3, ParamTarget::gamma, true});
  cases.push_back({m4, std::nullopt, true});
  cases.push_back({m4, ParamTarget::alpha1, true});
  cases.push_back({m4, ParamTarget::beta1, true});
  cases.push_back({m4, ParamTarget::alpha2, true});
  cases.push_back({m4, ParamTarget::beta2, true});
  cases.push_back({w, std::nullopt, true});
  cases.push_back({w, ParamTarget::alpha, true});
  cases.push_back({w, ParamTarget::beta, true});
  cases.push_back({lr, std::nullopt, true});
  cases.push_back({lr, ParamTarget::alpha, true});
  cases.push_back({lr, ParamTarget::beta, true});
  cases.push_back({lr, ParamTarget::gamma, true});
  // unbounded-growth witnesses at the slow end
  cases.push_back({Ml2{0.5, 1.0}, std::nullopt, false});
  cases.push_back({Ml2{0.5, 1.0}, ParamTarget::alpha, false});
  cases.push_back({Ml2{0.5, 1.0}, ParamTarget::beta, false});
  cases.push_back({Ml2{1.0, 1.0}, std::nullopt, false});
  cases.push_back({Ml2{1.0, 1.0}, ParamTarget::alpha, false});
  cases.push_back({Ml2{1.0, 1.0}, ParamTarget::beta, false});
  return cases;
}

bool eventually_increasing(const std::vector<double>& ratios,
                           size_t* tail_start) {
  if (ratios.size() < 4) return false;
  size_t start = ratios.size();
  for (size_t i = ratios.size(); i-- > 1;) {
    if (ratios[i] >= ratios[i - 1] * (1.0 - 1e-12))
      start = i - 1;
    else
      break;
  }
  if (tail_start) *tail_start = start;
  return start <= ratios.size() / 2;
}

namespace {

AuditSection audit_section_digamma() {
  AuditSection sec;
  sec.name = "digamma-bounds";
  std::vector<double> grid;
  grid.reserve(1000);
  for (int i = 0; i < 1000; ++i)
    grid.push_back(std::pow(10.0, -3.0 + 6.0 * i / 999.0));
  const DigammaBoundsReport rep = audit_digamma_bounds(grid);
  sec.pass = rep.pass;
  for (const DigammaBoundRecord& r : rep.records) {
    AuditRecord rec;
    rec.descriptor = "x=" + fmt_g17(r.x);
    double m = std::min(r.margin_lower, r.margin_upper3);
    if (r.has_eq9) m = std::min(m, r.margin_upper9);
    rec.margin = m;
    rec.pass = r.pass;
    sec.records.push_back(std::move(rec));
  }
  return sec;
}

AuditSection audit_section_majorant() {
  AuditSection sec;
  sec.name = "uniform-majorant";
  sec.pass = true;
  MajorantBox box1;  // alpha in [0.5,1], beta in [0,2], z = 2, k in [10,60]
  MajorantBox box2;
  box2.alpha_lo = 1.0;
  box2.alpha_hi = 2.0;
  box2.beta_hi = 1.0;
  box2.z = cplx(5.0, 0.0);
  box2.k_lo = 8;
  box2.k_hi = 40;
  int idx = 0;
  for (const MajorantBox& box : {box1, box2}) {
    ++idx;
    const MajorantReport rep = audit_uniform_majorant(box);
    sec.pass = sec.pass && rep.pass;
    for (const MajorantRecord& r : rep.records) {
      AuditRecord rec;
      rec.descriptor = "box=" + std::to_string(idx) + " alpha=" +
                       fmt_g17(r.alpha) + " beta=" + fmt_g17(r.beta) +
                       " k=" + std::to_string(r.k);
      rec.margin = r.margin;
      rec.pass = r.pass;
      sec.records.push_back(std::move(rec));
    }
  }
  return sec;
}

AuditSection audit_section_mb_decay() {
  AuditSection sec;
  sec.name = "mb-decay";
  sec.pass = true;
  const Ml2 p{1.0, 1.0};
  for (double phi : {0.5, 1.0}) {
    ContourSpec contour;
    contour.phi = phi;
    std::vector<double> grid;
    for (double x = 0.0; x <= 50.0; x += 0.5) grid.push_back(x);
    const IntegrandDecayReport rep =
        audit_integrand_decay(p, contour, grid, cplx(1.0, 0.0));
    sec.pass = sec.pass && rep.pass;
    for (const DecayRayRecord& r : rep.records) {
      AuditRecord rec;
      rec.descriptor = "phi=" + fmt_g17(phi) + " x=" + fmt_g17(r.x) +
                       " side=" + (r.side > 0 ? std::string("+") : std::string("-"));
      rec.margin = r.bound - r.product;
      rec.pass = r.pass_bound;
      sec.records.push_back(std::move(rec));
    }
    AuditRecord decay;
    decay.descriptor = "phi=" + fmt_g17(phi) + " decay-after-crossover x0=" +
                       fmt_g17(rep.crossover_x);
    decay.margin = rep.pass_decay ? 1.0 : -1.0;
    decay.pass = rep.pass_decay;
    sec.records.push_back(std::move(decay));
  }
  return sec;
}

AuditSection audit_section_radius(long k_max) {
  AuditSection sec;
  sec.name = "radius-witness";
  sec.pass = true;
  for (const RadiusCase& rc : radius_witness_cases()) {
    const std::vector<double> ratios =
        radius_probe(rc.params, rc.target, k_max);
    size_t tail = 0;
    const bool inc = eventually_increasing(ratios, &tail);
    const double top = *std::max_element(ratios.begin(), ratios.end());
    AuditRecord rec;
    rec.descriptor = describe(rc.params);
    if (rc.target) rec.descriptor += std::string(" target=") + to_string(*rc.target);
    rec.descriptor += rc.require_threshold ? " mode=threshold" : " mode=monotone";
    rec.margin = std::log10(top) - 6.0;
    rec.pass = inc && (!rc.require_threshold || top > 1e6);
    sec.pass = sec.pass && rec.pass;
    sec.records.push_back(std::move(rec));
  }
  return sec;
}

AuditSection audit_section_reflection(unsigned long long seed) {
  AuditSection sec;
  sec.name = "reflection";
  sec.pass = true;
  Rng rng(seed);
  int produced = 0;
  while (produced < 100) {
    const cplx s(rng.range(-30.0, 30.0), rng.range(-30.0, 30.0));
    if (std::abs(s) > 30.0) continue;
    if (std::fabs(s.real() - std::round(s.real())) < 0.05 &&
        std::fabs(s.imag()) < 0.05)
      continue;
    // Gamma(s)Gamma(1-s) sin(pi s)/pi = 1, Gammas through log_gamma.
    const cplx prod = std::exp(log_gamma(s) + log_gamma(1.0 - s)) *
                      detail::sinpi(s) / kPi;
    const double residual = std::abs(prod - 1.0);
    AuditRecord rec;
    rec.descriptor = "s=" + format_complex(s);
    rec.margin = 1e-12 - residual;
    rec.pass = residual <= 1e-12;
    sec.pass = sec.pass && rec.pass;
    sec.records.push_back(std::move(rec));
    ++produced;
  }
  return sec;
}

}  // namespace

AuditBundle run_full_audit(const AuditConfig& config) {
  AuditBundle bundle;
  bundle.seed = config.seed;
  bundle.pass = true;
  std::string suite;
  for (const std::string& name : config.audits)
    suite += (suite.empty() ? "" : ",") + name;
  bundle.suite = suite.empty() ? "(empty)" : suite;
  for (const std::string& name : config.audits) {
    AuditSection sec;
    if (name == "digamma-bounds")
      sec = audit_section_digamma();
    else if (name == "uniform-majorant")
      sec = audit_section_majorant();
    else if (name == "mb-decay")
      sec = audit_section_mb_decay();
    else if (name == "radius-witness")
      sec = audit_section_radius(config.radius_k_max);
    else if (name == "reflection")
      sec = audit_section_reflection(config.seed);
    else
      throw ConfigError("unknown audit name '" + name + "'");
    bundle.pass = bundle.pass && sec.pass;
    bundle.sections.push_back(std::move(sec));
  }
  return bundle;
}

void write_bundle(std::ostream& os, const AuditBundle& bundle) {
  os << "# mlpd-audit suite=" << bundle.suite << " seed=" << bundle.seed
     << "\n";
  for (const AuditSection& sec : bundle.sections)
    for (const AuditRecord& rec : sec.records)
      os << sec.name << "," << rec.descriptor << "," << fmt_g17(rec.margin)
         << "," << (rec.pass ? 1 : 0) << "\n";
  os << "# pass=" << (bundle.pass ? 1 : 0) << "\n";
}

}  // namespace mlpd
