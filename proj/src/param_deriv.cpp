#include "mlpd/param_deriv.hpp"

#include <cmath>

#include "mlpd/gamma_kernel.hpp"

namespace mlpd {

namespace detail {

namespace {

// Gamma(gamma+k) / (Gamma(gamma) k!)
LogComplex poch_over_factorial(const cplx& gamma, long k) {
  const double kk = static_cast<double>(k);
  return LogComplex::from_log(log_gamma(gamma + kk) - log_gamma(gamma) -
                              log_gamma(cplx(kk + 1.0, 0.0)));
}

}  // namespace

LogComplex deriv_coefficient_log_unchecked(const ParameterSet& p,
                                           ParamTarget t, long k) {
  const double kk = static_cast<double>(k);
  return std::visit(
      mlpd::detail::overloaded{
          [&](const Ml2& q) {
            const cplx w = q.alpha * kk + q.beta;
            if (t == ParamTarget::alpha) {
              if (k == 0) return LogComplex::zero();
              return LogComplex::from_real(-kk) * psi_over_gamma_log(w);
            }
            return LogComplex::from_real(-1.0) * psi_over_gamma_log(w);
          },
          [&](const Ml3& q) {
            const cplx w = q.alpha * kk + q.beta;
            const LogComplex poch = poch_over_factorial(q.gamma, k);
            if (t == ParamTarget::alpha) {
              if (k == 0) return LogComplex::zero();
              return LogComplex::from_real(-kk) * psi_over_gamma_log(w) * poch;
            }
            if (t == ParamTarget::beta)
              return LogComplex::from_real(-1.0) * psi_over_gamma_log(w) * poch;
            // gamma: [psi(gamma+k) - psi(gamma)] (gamma)_k / (k! Gamma(w)),
            // the two-series form combined into one coefficient.
            const cplx dpsi = digamma(q.gamma + kk) - digamma(q.gamma);
            return LogComplex::from_complex(dpsi) * poch * recip_gamma_log(w);
          },
          [&](const Ml4& q) {
            const cplx w1 = q.alpha1 * kk + q.beta1;
            const cplx w2 = q.alpha2 * kk + q.beta2;
            const bool first =
                t == ParamTarget::alpha1 || t == ParamTarget::beta1;
            const bool alpha_type =
                t == ParamTarget::alpha1 || t == ParamTarget::alpha2;
            const cplx& wj = first ? w1 : w2;
            const cplx& wo = first ? w2 : w1;
            if (alpha_type && k == 0) return LogComplex::zero();
            const LogComplex lead = alpha_type ? LogComplex::from_real(-kk)
                                               : LogComplex::from_real(-1.0);
            return lead * psi_over_gamma_log(wj) * recip_gamma_log(wo);
          },
          [&](const Wright& q) {
            const cplx w = q.alpha * kk + q.beta;
            const LogComplex rf = recip_gamma_log(cplx(kk + 1.0, 0.0));
            if (t == ParamTarget::alpha) {
              if (k == 0) return LogComplex::zero();
              return LogComplex::from_real(-kk) * psi_over_gamma_log(w) * rf;
            }
            return LogComplex::from_real(-1.0) * psi_over_gamma_log(w) * rf;
          },
          [&](const LeRoy& q) {
            const cplx w = q.alpha * kk + q.beta;
            const LogComplex denom =
                LogComplex::from_log(-q.gamma * log_gamma(w));
            if (t == ParamTarget::alpha) {
              if (k == 0) return LogComplex::zero();
              return LogComplex::from_real(-q.gamma * kk) *
                     LogComplex::from_complex(digamma(w)) * denom;
            }
            if (t == ParamTarget::beta)
              return LogComplex::from_real(-q.gamma) *
                     LogComplex::from_complex(digamma(w)) * denom;
            return LogComplex::from_complex(-log_gamma(w)) * denom;
          }},
      p);
}

}  // namespace detail

LogComplex deriv_coefficient_log(const ParameterSet& p, ParamTarget t, long k) {
  validate(p);
  if (k < 0) throw DomainError("deriv_coefficient: k must be non-negative");
  if (!target_applicable(p, t))
    throw DomainError(std::string("target ") + to_string(t) +
                      " does not apply to family " + family_name(p));
  return detail::deriv_coefficient_log_unchecked(p, t, k);
}

cplx deriv_coefficient(const ParameterSet& p, ParamTarget t, long k) {
  return deriv_coefficient_log(p, t, k).to_complex();
}

Evaluation evaluate_param_derivative(const ParameterSet& p, ParamTarget t,
                                     const cplx& z,
                                     const TruncationPolicy& policy) {
  validate(p);
  if (!target_applicable(p, t))
    throw DomainError(std::string("target ") + to_string(t) +
                      " does not apply to family " + family_name(p));
  return detail::sum_power_series(
      [&p, t](long k) {
        return detail::deriv_coefficient_log_unchecked(p, t, k);
      },
      z, policy);
}

MajorantReport audit_uniform_majorant(const MajorantBox& box) {
  const double a = box.alpha_lo, b = box.alpha_hi, B = box.beta_hi;
  if (!(a > 0.0) || !(b >= a) || !(B > 0.0))
    throw DomainError("majorant box: need 0 < alpha_lo <= alpha_hi, beta_hi > 0");
  if (box.alpha_samples < 1 || box.beta_samples < 1 || box.k_hi < box.k_lo)
    throw DomainError("majorant box: malformed grid");

  const double e_1mg = std::exp(1.0 - kEulerGamma);
  const double k1 = 2.0 / a;
  const double k2 = (3.0 - B - e_1mg) / b;  // can be negative for large B
  MajorantReport report;
  report.k0 = static_cast<long>(std::ceil(std::max({k1, k2, 1.0})));
  if (box.k_lo <= report.k0)
    throw DomainError("majorant box: k range must start above k0");

  report.pass = true;
  const int na = (a == b) ? 1 : box.alpha_samples;
  const long kstep = std::max(1L, (box.k_hi - box.k_lo) / 12);
  for (int ia = 0; ia < na; ++ia) {
    const double alpha = (na == 1) ? a : a + (b - a) * ia / (na - 1);
    for (int ib = 0; ib < box.beta_samples; ++ib) {
      const double beta =
          (box.beta_samples == 1) ? 0.0 : B * ib / (box.beta_samples - 1);
      for (long k = box.k_lo; k <= box.k_hi; k += kstep) {
        const double kk = static_cast<double>(k);
        const double w = alpha * kk + beta;
        const double psi = digamma(cplx(w, 0.0)).real();  // w >= 2 here
        const double log_lhs =
            std::log(kk) + std::log(psi) - log_gamma(cplx(w, 0.0)).real();
        const double log_rhs =
            std::log(kk) + std::log(std::log(b * kk + B + e_1mg - 2.0)) -
            log_gamma(cplx(a * kk, 0.0)).real();
        // |z|^k appears identically on both sides and cancels in the margin.
        MajorantRecord rec;
        rec.alpha = alpha;
        rec.beta = beta;
        rec.k = k;
        rec.margin = log_rhs - log_lhs;
        rec.pass = rec.margin >= -5e-13;
        report.pass = report.pass && rec.pass;
        report.records.push_back(rec);
      }
    }
  }
  return report;
}

}  // namespace mlpd
