// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exit code 0 only if every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mlpd/cli.hpp"
#include "mlpd/gamma_kernel.hpp"
#include "mlpd/mellin_barnes.hpp"
#include "mlpd/param_deriv.hpp"
#include "mlpd/rng.hpp"
#include "mlpd/series.hpp"
#include "mlpd/validation.hpp"
#include "oracle_fixtures.hpp"

using namespace mlpd;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + why;
  }
};

double rel(const cplx& got, const cplx& want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// ---- 1: identity suite ------------------------------------------------------

Outcome identity_suite() {
  Outcome out;
  Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    const cplx z = rng.disc(5.0);
    const double tol = 1e-12 * std::exp(std::abs(z));
    const cplx e1 = evaluate_series(Ml2{1.0, 1.0}, z).value;
    if (std::abs(e1 - std::exp(z)) > tol) out.fail("E_{1,1} != exp");
    const cplx e2 = evaluate_series(Ml2{2.0, 1.0}, z * z).value;
    if (std::abs(e2 - std::cosh(z)) > tol) out.fail("E_{2,1}(z^2) != cosh");
  }
  const cplx alpha(0.8, 0.0), beta(1.2, 0.0);
  const Ml2 m2{alpha, beta};
  for (long k = 0; k <= 100; ++k) {
    const cplx base = coefficient(m2, k);
    if (rel(coefficient(Ml3{alpha, beta, 1.0}, k), base) > 1e-15)
      out.fail("ml3 gamma=1 collapse at k=" + std::to_string(k));
    if (rel(coefficient(LeRoy{alpha, beta, 1.0}, k), base) > 1e-15)
      out.fail("leroy gamma=1 collapse at k=" + std::to_string(k));
    if (rel(coefficient(Ml4{alpha, beta, 1.0, 1.0}, k),
            coefficient(Wright{alpha, beta}, k)) > 1e-15)
      out.fail("ml4 (1,1) collapse at k=" + std::to_string(k));
  }
  return out;
}

// ---- 2: derivative correctness ---------------------------------------------

Outcome derivative_correctness() {
  Outcome out;
  Rng rng(202);
  struct Pair {
    ParameterSet params;
    ParamTarget target;
    const char* tag;
  };
  auto fresh_ml2 = [&] { return Ml2{rng.range(0.6, 1.8), rng.range(0.3, 2.0)}; };
  auto fresh_ml3 = [&] {
    return Ml3{rng.range(0.6, 1.8), rng.range(0.3, 2.0), rng.range(0.5, 2.5)};
  };
  auto fresh_ml4 = [&] {
    return Ml4{rng.range(0.5, 1.4), rng.range(0.3, 2.0), rng.range(0.5, 1.4),
               rng.range(0.3, 2.0)};
  };
  auto fresh_wright = [&] {
    return Wright{rng.range(0.2, 1.6), rng.range(0.3, 2.0)};
  };
  auto fresh_leroy = [&] {
    return LeRoy{rng.range(0.6, 1.8), rng.range(0.3, 2.0), rng.range(0.6, 2.2)};
  };

  std::vector<Pair> pairs;
  pairs.push_back({fresh_ml2(), ParamTarget::alpha, "ml2/alpha"});
  pairs.push_back({fresh_ml2(), ParamTarget::beta, "ml2/beta"});
  pairs.push_back({fresh_ml3(), ParamTarget::alpha, "ml3/alpha"});
  pairs.push_back({fresh_ml3(), ParamTarget::beta, "ml3/beta"});
  pairs.push_back({fresh_ml3(), ParamTarget::gamma, "ml3/gamma"});
  pairs.push_back({fresh_ml4(), ParamTarget::alpha1, "ml4/alpha1"});
  pairs.push_back({fresh_ml4(), ParamTarget::beta1, "ml4/beta1"});
  pairs.push_back({fresh_ml4(), ParamTarget::alpha2, "ml4/alpha2"});
  pairs.push_back({fresh_ml4(), ParamTarget::beta2, "ml4/beta2"});
  pairs.push_back({fresh_wright(), ParamTarget::alpha, "wright/alpha"});
  pairs.push_back({fresh_wright(), ParamTarget::beta, "wright/beta"});
  pairs.push_back({fresh_leroy(), ParamTarget::alpha, "leroy/alpha"});
  pairs.push_back({fresh_leroy(), ParamTarget::beta, "leroy/beta"});
  pairs.push_back({fresh_leroy(), ParamTarget::gamma, "leroy/gamma"});

  for (const Pair& pr : pairs) {
    std::vector<double> orders;
    for (int i = 0; i < 20; ++i) {
      const cplx z = rng.disc(3.0);
      const cplx analytic =
          evaluate_param_derivative(pr.params, pr.target, z).value;
      const cplx fd = central_fd(pr.params, pr.target, z, 1e-5);
      if (std::abs(analytic - fd) > 1e-6 * std::max(1.0, std::abs(analytic)))
        out.fail(std::string(pr.tag) + " fd mismatch");
      const double e1 = std::abs(central_fd(pr.params, pr.target, z, 1e-2) -
                                 analytic);
      const double e2 = std::abs(central_fd(pr.params, pr.target, z, 5e-3) -
                                 analytic);
      if (e1 > 0.0 && e2 > 0.0) orders.push_back(std::log2(e1 / e2));
    }
    std::sort(orders.begin(), orders.end());
    const double median = orders[orders.size() / 2];
    if (std::fabs(median - 2.0) > 0.3)
      out.fail(std::string(pr.tag) + " observed order " +
               std::to_string(median));
  }
  if (out.pass) out.detail = "14 (family,target) pairs x 20 points";
  return out;
}

// ---- 3: pathway equivalence -------------------------------------------------

std::vector<PointSpec> equivalence_grid() {
  // 12 (alpha, beta) combinations; alternating 3 and 2 ring angles = 30 points
  const double alphas[] = {0.6, 1.0, 1.7};
  const double betas[] = {0.0, 0.5, 1.0, 2.5};
  const double angles3[] = {0.5, 1.7, -1.1};
  const double angles2[] = {-0.5, 2.3};
  std::vector<PointSpec> grid;
  int idx = 0;
  for (double a : alphas)
    for (double b : betas) {
      const bool three = (idx++ % 2) == 0;
      const int n = three ? 3 : 2;
      for (int i = 0; i < n; ++i) {
        const double th = three ? angles3[i] : angles2[i];
        grid.push_back(PointSpec{Ml2{a, b}, std::nullopt,
                                 0.8 * cplx(std::cos(th), std::sin(th))});
      }
    }
  return grid;
}

Outcome pathway_equivalence() {
  Outcome out;
  const std::vector<PointSpec> grid = equivalence_grid();
  if (grid.size() != 30) out.fail("grid size != 30");
  int checked = 0;
  for (const PointSpec& point : grid) {
    const Evaluation s = evaluate_series(point.params, point.z);
    const Evaluation m = mb_evaluate(point.params, point.z);
    const double budget = 1e-8 + 10.0 * (s.abs_err_est + m.abs_err_est);
    if (std::abs(s.value - m.value) > budget)
      out.fail("value mismatch at " + describe(point));
    ++checked;
    for (const ParamTarget t : {ParamTarget::alpha, ParamTarget::beta}) {
      const Evaluation sd =
          evaluate_param_derivative(point.params, t, point.z);
      const Evaluation md = mb_param_derivative(std::get<Ml2>(point.params), t,
                                                point.z);
      const double dbudget = 1e-8 + 10.0 * (sd.abs_err_est + md.abs_err_est);
      if (std::abs(sd.value - md.value) > dbudget)
        out.fail(std::string("derivative (") + to_string(t) + ") mismatch at " +
                 describe(point));
      ++checked;
    }
  }
  if (out.pass)
    out.detail = std::to_string(checked) + " comparisons on the 30-point grid";
  return out;
}

// ---- 4: contour invariance --------------------------------------------------

Outcome contour_invariance() {
  Outcome out;
  const std::vector<PointSpec> points = {
      {Ml2{0.7, 1.1}, std::nullopt, 0.8 * cplx(std::cos(0.5), std::sin(0.5))},
      {Ml2{1.3, 0.4}, std::nullopt, 0.8 * cplx(std::cos(2.0), std::sin(2.0))},
      {Ml3{0.9, 1.0, 1.4}, std::nullopt,
       0.8 * cplx(std::cos(-0.9), std::sin(-0.9))},
      {Ml4{0.8, 1.0, 0.9, 0.7}, std::nullopt,
       0.8 * cplx(std::cos(1.2), std::sin(1.2))},
      {LeRoy{1.1, 0.9, 1.3}, std::nullopt,
       0.8 * cplx(std::cos(-2.2), std::sin(-2.2))}};
  for (const PointSpec& point : points) {
    std::vector<Evaluation> evals;
    for (double c : {0.3, 0.5, 0.7})
      for (double phi : {0.5, 1.0, 2.0}) {
        ContourSpec spec;
        spec.c = c;
        spec.phi = phi;
        evals.push_back(mb_evaluate(point.params, point.z, spec));
      }
    for (size_t i = 0; i < evals.size(); ++i)
      for (size_t j = i + 1; j < evals.size(); ++j)
        if (std::abs(evals[i].value - evals[j].value) >
            evals[i].abs_err_est + evals[j].abs_err_est)
          out.fail("contour variation exceeds estimates at " + describe(point));
  }
  if (out.pass) out.detail = "9 contours x 5 points";
  return out;
}

// ---- 5: bound audits ----------------------------------------------------------

Outcome bound_audits() {
  Outcome out;
  std::vector<double> grid;
  for (int i = 0; i < 1000; ++i)
    grid.push_back(std::pow(10.0, -3.0 + 6.0 * i / 999.0));
  if (!audit_digamma_bounds(grid).pass) out.fail("digamma bounds violated");

  MajorantBox box1;
  MajorantBox box2;
  box2.alpha_lo = 1.0;
  box2.alpha_hi = 2.0;
  box2.beta_hi = 1.0;
  box2.z = cplx(5.0, 0.0);
  box2.k_lo = 8;
  box2.k_hi = 40;
  if (!audit_uniform_majorant(box1).pass) out.fail("majorant box 1 violated");
  if (!audit_uniform_majorant(box2).pass) out.fail("majorant box 2 violated");

  std::vector<double> xs;
  for (double x = 0.0; x <= 50.0; x += 0.5) xs.push_back(x);
  for (double phi : {0.5, 1.0, 2.0}) {
    ContourSpec contour;
    contour.phi = phi;
    const IntegrandDecayReport rep =
        audit_integrand_decay(Ml2{1.0, 1.0}, contour, xs, cplx(1.0, 0.0));
    if (!rep.pass_bound)
      out.fail("reflection-product bound violated at phi=" +
               std::to_string(phi));
    if (!rep.pass_decay)
      out.fail("integrand decay failed at phi=" + std::to_string(phi));
  }
  if (out.pass) out.detail = "zero violations";
  return out;
}

// ---- 6: radius witnesses ------------------------------------------------------

Outcome radius_witnesses() {
  Outcome out;
  int with_threshold = 0;
  for (const RadiusCase& rc : radius_witness_cases()) {
    const std::vector<double> ratios = radius_probe(rc.params, rc.target,
                                                    10000);
    size_t tail = 0;
    if (!eventually_increasing(ratios, &tail))
      out.fail(describe(rc.params) + " ratios not eventually increasing");
    const double top = *std::max_element(ratios.begin(), ratios.end());
    if (rc.require_threshold) {
      ++with_threshold;
      if (!(top > 1e6))
        out.fail(describe(rc.params) + " max ratio " + std::to_string(top));
    }
  }
  if (out.pass)
    out.detail = std::to_string(with_threshold) +
                 " sequences cleared 1e6 within k <= 1e4";
  return out;
}

// ---- 7: error-estimate honesty ----------------------------------------------

Outcome estimate_honesty() {
  Outcome out;
  int n = 0;
  for (const auto& e : mlpd_fixtures::kOracleEvals) {
    ParameterSet p = Ml2{1.0, 1.0};
    const std::string fam = e.family;
    if (fam == "ml2")
      p = Ml2{{e.a_re, e.a_im}, {e.b_re, e.b_im}};
    else if (fam == "ml3")
      p = Ml3{{e.a_re, e.a_im}, {e.b_re, e.b_im}, {e.g_re, e.g_im}};
    else if (fam == "ml4")
      p = Ml4{{e.a_re, e.a_im},
              {e.b_re, e.b_im},
              {e.a2_re, e.a2_im},
              {e.b2_re, e.b2_im}};
    else if (fam == "wright")
      p = Wright{{e.a_re, e.a_im}, {e.b_re, e.b_im}};
    else
      p = LeRoy{{e.a_re, e.a_im}, {e.b_re, e.b_im}, e.g_re};
    const cplx z(e.z_re, e.z_im);
    const Evaluation ev =
        e.target < 0 ? evaluate_series(p, z)
                     : evaluate_param_derivative(
                           p, static_cast<ParamTarget>(e.target), z);
    const double true_err = std::abs(ev.value - cplx(e.val_re, e.val_im));
    if (!ev.converged) out.fail(describe(p) + " did not converge");
    if (true_err > 10.0 * ev.abs_err_est)
      out.fail(describe(p) + " true error exceeds 10x estimate");
    ++n;
  }
  if (out.pass)
    out.detail = std::to_string(n) + " evaluations vs 50-digit oracle values";
  return out;
}

// ---- 8: determinism -----------------------------------------------------------

Outcome determinism() {
  Outcome out;
  auto run_once = [] {
    const char* argv[] = {"mlpd", "audit", "--suite", "default", "--seed",
                          "42"};
    std::ostringstream o, e;
    const int code = run_cli(6, argv, o, e);
    return std::make_pair(code, o.str());
  };
  const auto a = run_once();
  const auto b = run_once();
  if (a.first != 0) out.fail("audit exit code " + std::to_string(a.first));
  if (a.second != b.second) out.fail("audit output is not byte-identical");
  if (out.pass)
    out.detail = std::to_string(a.second.size()) + " bytes, identical";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> fn;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"identity-suite", identity_suite, 5.0},
      {"derivative-correctness", derivative_correctness, 30.0},
      {"pathway-equivalence", pathway_equivalence, 60.0},
      {"contour-invariance", contour_invariance, 60.0},
      {"bound-audits", bound_audits, 60.0},
      {"radius-witnesses", radius_witnesses, 60.0},
      {"estimate-honesty", estimate_honesty, 60.0},
      {"determinism", determinism, 60.0},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (seconds > criteria[i].budget_seconds) {
      out.pass = false;
      out.detail += "; exceeded runtime budget";
    }
    std::printf("[%zu/%zu] %-24s %s (%.2f s)%s%s\n", i + 1, criteria.size(),
                criteria[i].name, out.pass ? "PASS" : "FAIL", seconds,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    if (!out.pass) ++failures;
  }
  if (failures == 0)
    std::printf("ACCEPTANCE: all %zu criteria passed\n", criteria.size());
  else
    std::printf("ACCEPTANCE: %d of %zu criteria FAILED\n", failures,
                criteria.size());
  return failures == 0 ? 0 : 1;
}
