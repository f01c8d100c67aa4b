#include "mlpd/series.hpp"

#include <cmath>

#include "mlpd/gamma_kernel.hpp"
#include "mlpd/param_deriv.hpp"

namespace mlpd {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTinyFloor = 1e-300;

double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Kahan sum of scaled terms; `scale` is the log of the common factor.
struct ScaledSum {
  double scale = kNegInf;
  cplx sum{0.0, 0.0};
  cplx comp{0.0, 0.0};
  double sum_abs = 0.0;
  double sum_round = 0.0;  // |t| weighted by the log magnitudes behind it

  void add(const LogComplex& t) {
    if (t.is_zero()) return;
    if (scale == kNegInf) {
      scale = t.log_mag;
    } else if (t.log_mag > scale + 350.0) {
      const double f = std::exp(scale - t.log_mag);
      sum *= f;
      comp *= f;
      sum_abs *= f;
      sum_round *= f;
      scale = t.log_mag;
    }
    const double m = std::exp(t.log_mag - scale);
    const cplx v(m * std::cos(t.phase), m * std::sin(t.phase));
    const cplx y = v - comp;
    const cplx s2 = sum + y;
    comp = (s2 - sum) - y;
    sum = s2;
    sum_abs += m;
    // a term assembled in log space carries absolute error of order
    // eps * (|log mag| + |phase|) in its logarithm
    sum_round += m * (4.0 + std::fabs(t.log_mag) + std::fabs(t.phase));
  }

  double log_abs_sum() const {
    const double a = std::abs(sum);
    return (a == 0.0 || scale == kNegInf) ? kNegInf : scale + std::log(a);
  }
  double log_round_floor() const {
    return (sum_round == 0.0 || scale == kNegInf)
               ? kNegInf
               : std::log(std::numeric_limits<double>::epsilon()) + scale +
                     std::log(sum_round);
  }
  LogComplex value_log() const {
    const double a = std::abs(sum);
    if (a == 0.0 || scale == kNegInf) return LogComplex::zero();
    return {scale + std::log(a), std::arg(sum)};
  }
  cplx value() const {
    if (scale == kNegInf) return {0.0, 0.0};
    const double f = std::exp(scale);
    if (std::isfinite(f) && f > 0.0) return sum * f;
    return value_log().to_complex();
  }
};

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::mellin_barnes: return "mellin-barnes";
    case Method::finite_difference: return "finite-difference";
  }
  return "?";
}

void TruncationPolicy::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("policy: rel_tol must be positive");
  if (max_terms < 1) throw DomainError("policy: max_terms must be >= 1");
  if (small_run < 1) throw DomainError("policy: small_run must be >= 1");
}

namespace detail {

LogComplex coefficient_log_unchecked(const ParameterSet& p, long k) {
  const double kk = static_cast<double>(k);
  return std::visit(
      detail::overloaded{
          [&](const Ml2& q) { return recip_gamma_log(q.alpha * kk + q.beta); },
          [&](const Ml3& q) {
            // Gamma(gamma+k) / (Gamma(gamma) k!) via log differences; exp
            // removes any branch ambiguity in the individual log-gammas.
            const cplx d = log_gamma(q.gamma + kk) - log_gamma(q.gamma) -
                           log_gamma(cplx(kk + 1.0, 0.0));
            return LogComplex::from_log(d) *
                   recip_gamma_log(q.alpha * kk + q.beta);
          },
          [&](const Ml4& q) {
            return recip_gamma_log(q.alpha1 * kk + q.beta1) *
                   recip_gamma_log(q.alpha2 * kk + q.beta2);
          },
          [&](const Wright& q) {
            return recip_gamma_log(q.alpha * kk + q.beta) *
                   recip_gamma_log(cplx(kk + 1.0, 0.0));
          },
          [&](const LeRoy& q) {
            return LogComplex::from_log(-q.gamma *
                                        log_gamma(q.alpha * kk + q.beta));
          }},
      p);
}

Evaluation sum_power_series(const std::function<LogComplex(long)>& coeff,
                            const cplx& z, const TruncationPolicy& policy) {
  policy.validate();
  Evaluation ev;
  ev.method = Method::series;

  if (z.real() == 0.0 && z.imag() == 0.0) {
    const LogComplex c0 = coeff(0);
    ev.value_log = c0;
    ev.value = c0.to_complex();
    ev.terms_used = 1;
    ev.converged = true;
    return ev;
  }

  const LogComplex lz = LogComplex::from_complex(z);
  const double log_rel = std::log(policy.rel_tol);

  ScaledSum acc;
  int run = 0;
  double last_nz = kNegInf, prev_nz = kNegInf;
  long k = 0;
  bool stopped = false;
  long k_stop = 0;

  for (k = 0; k < policy.max_terms; ++k) {
    const LogComplex term = coeff(k) * lz.pow_int(k);
    acc.add(term);
    if (!term.is_zero()) {
      prev_nz = last_nz;
      last_nz = term.log_mag;
    }
    const bool small =
        term.is_zero() || term.log_mag < log_rel + acc.log_abs_sum();
    run = small ? run + 1 : 0;
    if (run >= policy.small_run) {
      double log_tail;
      if (policy.tail_mode == TailMode::last_term) {
        const LogComplex next = coeff(k + 1) * lz.pow_int(k + 1);
        log_tail = next.is_zero() ? kNegInf : next.log_mag;
      } else {
        // Last nonzero term divided by (1 - observed ratio), ratio clamped
        // to 0.99; the true term ratio tends to zero, so this overestimates.
        double r = 0.99;
        if (last_nz != kNegInf && prev_nz != kNegInf)
          r = std::min(std::exp(last_nz - prev_nz), 0.99);
        log_tail = (last_nz == kNegInf) ? kNegInf : last_nz - std::log1p(-r);
      }
      const double log_est = log_add_exp(log_tail, acc.log_round_floor());
      const double bound = std::log(10.0 * policy.rel_tol) +
                           std::max(acc.log_abs_sum(), std::log(kTinyFloor));
      if (log_est <= bound) {
        stopped = true;
        k_stop = k + 1;
        ev.log_abs_err = log_est;
        break;
      }
      run = 0;
    }
  }

  if (!stopped) {
    k_stop = policy.max_terms;
    double r = 0.99;
    if (last_nz != kNegInf && prev_nz != kNegInf)
      r = std::min(std::exp(last_nz - prev_nz), 0.99);
    const double log_tail =
        (last_nz == kNegInf) ? kNegInf : last_nz - std::log1p(-r);
    ev.log_abs_err = log_add_exp(log_tail, acc.log_round_floor());
  }

  ev.terms_used = k_stop;
  ev.converged = stopped;
  ev.value_log = acc.value_log();
  ev.value = acc.value();
  ev.abs_err_est = std::exp(ev.log_abs_err);
  return ev;
}

}  // namespace detail

LogComplex coefficient_log(const ParameterSet& p, long k) {
  validate(p);
  if (k < 0) throw DomainError("coefficient: k must be non-negative");
  return detail::coefficient_log_unchecked(p, k);
}

cplx coefficient(const ParameterSet& p, long k) {
  return coefficient_log(p, k).to_complex();
}

Evaluation evaluate_series(const ParameterSet& p, const cplx& z,
                           const TruncationPolicy& policy) {
  validate(p);
  return detail::sum_power_series(
      [&p](long k) { return detail::coefficient_log_unchecked(p, k); }, z,
      policy);
}

std::vector<double> radius_probe(const ParameterSet& p,
                                 std::optional<ParamTarget> derivative_target,
                                 long k_max) {
  validate(p);
  if (k_max < 10) throw DomainError("radius_probe: k_max must be >= 10");
  auto coeff = [&](long k) {
    return derivative_target
               ? detail::deriv_coefficient_log_unchecked(p, *derivative_target,
                                                         k)
               : detail::coefficient_log_unchecked(p, k);
  };
  std::vector<double> ratios;
  ratios.reserve(static_cast<size_t>(k_max));
  LogComplex prev = coeff(1);
  for (long k = 1; k <= k_max; ++k) {
    const LogComplex next = coeff(k + 1);
    double r;
    if (prev.is_zero())
      r = 0.0;
    else if (next.is_zero())
      r = std::numeric_limits<double>::infinity();
    else
      r = std::exp(prev.log_mag - next.log_mag);
    ratios.push_back(r);
    prev = next;
  }
  return ratios;
}

}  // namespace mlpd
