#include "mlpd/mellin_barnes.hpp"

#include <array>
#include <cmath>
#include <functional>

#include "mlpd/gamma_kernel.hpp"

namespace mlpd {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kXmaxCap = 400.0;

// Gauss 7 / Kronrod 15 nodes and weights (QUADPACK dqk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

using Integrand = std::function<cplx(double)>;

struct PanelResult {
  cplx integral{0.0, 0.0};
  double err = 0.0;
  double resabs = 0.0;  // integral of |f|, for the round-off floor
};

PanelResult gk15(const Integrand& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  cplx kronrod{0.0, 0.0};
  cplx gauss{0.0, 0.0};
  double resabs = 0.0;
  const cplx fc = f(mid);
  kronrod += kWgk[7] * fc;
  gauss += kWg[3] * fc;
  resabs += kWgk[7] * std::abs(fc);
  for (int i = 0; i < 7; ++i) {
    const cplx fl = f(mid - half * kXgk[i]);
    const cplx fr = f(mid + half * kXgk[i]);
    kronrod += kWgk[i] * (fl + fr);
    resabs += kWgk[i] * (std::abs(fl) + std::abs(fr));
    if (i % 2 == 1) gauss += kWg[i / 2] * (fl + fr);
  }
  PanelResult r;
  r.integral = kronrod * half;
  r.err = std::abs((kronrod - gauss) * half);
  r.resabs = resabs * std::fabs(half);
  return r;
}

struct QuadState {
  long nodes = 0;
  long max_nodes = 0;
  bool budget_ok = true;
};

cplx adapt(const Integrand& f, double a, double b, double tol, int depth,
           QuadState& st, double& err_acc) {
  const PanelResult r = gk15(f, a, b);
  st.nodes += 15;
  if (st.nodes > st.max_nodes) {
    st.budget_ok = false;
    err_acc += r.err;
    return r.integral;
  }
  // round-off floor: no panel can beat ~eps times the integral of |f|
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * r.resabs;
  if (r.err <= std::max(tol, floor) || depth >= 30) {
    err_acc += r.err;
    return r.integral;
  }
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth + 1, st, err_acc) +
         adapt(f, mid, b, 0.5 * tol, depth + 1, st, err_acc);
}

// Fixed subdivision sequence: seed panels of width <= 4, then bisection.
cplx integrate_leg(const Integrand& f, double a, double b, double tol,
                   QuadState& st, double& err_acc) {
  if (a == b) return {0.0, 0.0};
  const int n = std::max(1, static_cast<int>(std::ceil(std::fabs(b - a) / 4.0)));
  cplx total{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const double x0 = a + (b - a) * i / n;
    const double x1 = a + (b - a) * (i + 1) / n;
    total += adapt(f, x0, x1, tol / n, 0, st, err_acc);
  }
  return total;
}

cplx pole_safe_pi_over_sin(const cplx& s) { return kPi / detail::sinpi(s); }

double effective_crossing(const ParameterSet& p, double c) {
  // Prabhakar: the poles of Gamma(gamma - s) sit at s = gamma + m; keep the
  // vertical leg strictly left of them.
  if (const auto* m3 = std::get_if<Ml3>(&p)) {
    if (m3->gamma.real() <= c) return m3->gamma.real() / 2.0;
  }
  return c;
}

struct LegGeometry {
  bool right_loop = false;  // LeRoy
  double c = 0.5;
  double phi = 1.0;
};

// Log-magnitude of the integrand at distance d beyond the crossing on the
// horizontal rays (the worse of the two rays).
double ray_log_mag(const ParameterSet& p, const LegGeometry& g,
                   const cplx& lmz, double d) {
  const double x = g.right_loop ? g.c + d : g.c - d;
  const LogComplex lo = detail::mb_integrand_log(p, cplx(x, -g.phi), lmz);
  const LogComplex hi = detail::mb_integrand_log(p, cplx(x, g.phi), lmz);
  return std::max(lo.is_zero() ? -1e300 : lo.log_mag,
                  hi.is_zero() ? -1e300 : hi.log_mag);
}

Evaluation contour_integral(const ParameterSet& p,
                            const std::function<LogComplex(const cplx&)>& ig,
                            const cplx& z, const ContourSpec& contour,
                            const LogComplex& additive) {
  contour.validate();
  const cplx lmz(std::log(std::abs(z)), BranchRule::arg_minus(z));
  LegGeometry g;
  g.right_loop = std::holds_alternative<LeRoy>(p);
  g.c = effective_crossing(p, contour.c);
  g.phi = contour.phi;

  auto f = [&](const cplx& s) { return ig(s).to_complex(); };

  double tail_mag = 0.0;
  double xm;
  if (contour.x_max > g.c) {
    xm = contour.x_max;
    tail_mag = std::exp(
        std::min(700.0, ray_log_mag(p, g, lmz, xm - std::fabs(g.c))));
  } else {
    // probe uses the same integrand family; cheap relative to quadrature
    const auto probe_ig = [&](double d) {
      const double x = g.right_loop ? g.c + d : g.c - d;
      const LogComplex lo = ig(cplx(x, -g.phi));
      const LogComplex hi = ig(cplx(x, g.phi));
      return std::max(lo.is_zero() ? -1e300 : lo.log_mag,
                      hi.is_zero() ? -1e300 : hi.log_mag);
    };
    const double thresh = std::log(contour.quad_tol) + std::log(1e-3);
    int below = 0;
    double d = 1.0, last = 0.0;
    for (; d <= kXmaxCap; d += 1.0) {
      last = probe_ig(d);
      below = (last < thresh) ? below + 1 : 0;
      if (below >= 5) break;
    }
    tail_mag = std::exp(std::min(last, 700.0));
    xm = std::min(d, kXmaxCap);
  }

  QuadState st;
  st.max_nodes = contour.max_nodes;
  double err_acc = 0.0;
  const double leg_tol = contour.quad_tol / 3.0;
  cplx total{0.0, 0.0};

  if (!g.right_loop) {
    const double left = g.c - xm;
    // lower ray, left to right
    total += integrate_leg([&](double u) { return f(cplx(u, -g.phi)); }, left,
                           g.c, leg_tol, st, err_acc);
    // vertical segment, upward
    total += integrate_leg(
        [&](double t) { return cplx(0.0, 1.0) * f(cplx(g.c, t)); }, -g.phi,
        g.phi, leg_tol, st, err_acc);
    // upper ray, right to left
    total -= integrate_leg([&](double u) { return f(cplx(u, g.phi)); }, left,
                           g.c, leg_tol, st, err_acc);
  } else {
    const double right = g.c + xm;
    // clockwise around s = 1, 2, ...: bottom leftward, up, top rightward
    total -= integrate_leg([&](double u) { return f(cplx(u, -g.phi)); }, g.c,
                           right, leg_tol, st, err_acc);
    total += integrate_leg(
        [&](double t) { return cplx(0.0, 1.0) * f(cplx(g.c, t)); }, -g.phi,
        g.phi, leg_tol, st, err_acc);
    total += integrate_leg([&](double u) { return f(cplx(u, g.phi)); }, g.c,
                           right, leg_tol, st, err_acc);
  }

  Evaluation ev;
  ev.method = Method::mellin_barnes;
  ev.value = total / cplx(0.0, kTwoPi) + additive.to_complex();
  ev.abs_err_est = (err_acc + 2.0 * tail_mag) / kTwoPi;
  ev.terms_used = st.nodes;
  ev.value_log = LogComplex::from_complex(ev.value);
  ev.log_abs_err = std::log(ev.abs_err_est);
  ev.converged = st.budget_ok &&
                 ev.abs_err_est <=
                     10.0 * contour.quad_tol * std::max(1.0, std::abs(ev.value));
  return ev;
}

}  // namespace

void ContourSpec::validate() const {
  if (!(c > 0.0 && c < 1.0)) throw DomainError("contour: need 0 < c < 1");
  if (!(phi > 0.0)) throw DomainError("contour: need phi > 0");
  if (x_max > 0.0 && !(x_max > c))
    throw DomainError("contour: need x_max > c");
  if (!(quad_tol > 0.0)) throw DomainError("contour: need quad_tol > 0");
  if (max_nodes < 100) throw DomainError("contour: max_nodes too small");
}

double BranchRule::arg_minus(const cplx& z) {
  if (z.real() == 0.0 && z.imag() == 0.0)
    throw BranchError("(-z)^{-s}: z = 0 is not admissible");
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw BranchError("(-z)^{-s}: z on the negative real axis (arg z = pi)");
  const double t = std::arg(z);
  return t > 0.0 ? t - kPi : t + kPi;
}

namespace detail {

LogComplex mb_integrand_log(const ParameterSet& p, const cplx& s,
                            const cplx& lmz) {
  return std::visit(
      mlpd::detail::overloaded{
          [&](const Ml2& q) {
            return LogComplex::from_complex(pole_safe_pi_over_sin(s)) *
                   recip_gamma_log(q.beta - q.alpha * s) *
                   LogComplex::from_log(-s * lmz);
          },
          [&](const Ml3& q) {
            // Gamma(s)Gamma(gamma-s)/Gamma(gamma)
            //   = [pi/sin(pi s)] Gamma(gamma-s) / (Gamma(1-s) Gamma(gamma))
            const cplx extra = log_gamma(q.gamma - s) - log_gamma(1.0 - s) -
                               log_gamma(q.gamma);
            return LogComplex::from_complex(pole_safe_pi_over_sin(s)) *
                   LogComplex::from_log(extra) *
                   recip_gamma_log(q.beta - q.alpha * s) *
                   LogComplex::from_log(-s * lmz);
          },
          [&](const Ml4& q) {
            return LogComplex::from_complex(pole_safe_pi_over_sin(s)) *
                   recip_gamma_log(q.beta1 - q.alpha1 * s) *
                   recip_gamma_log(q.beta2 - q.alpha2 * s) *
                   LogComplex::from_log(-s * lmz);
          },
          [&](const Wright& q) {
            return LogComplex::from_complex(pole_safe_pi_over_sin(s)) *
                   recip_gamma_log(q.beta - q.alpha * s) *
                   recip_gamma_log(1.0 - s) * LogComplex::from_log(-s * lmz);
          },
          [&](const LeRoy& q) {
            // Gamma(-s)Gamma(1+s) = -pi/sin(pi s); integrand uses (-z)^{+s}
            // and the gamma-th power of Gamma(beta + alpha s).
            return LogComplex::from_complex(-pole_safe_pi_over_sin(s)) *
                   LogComplex::from_log(-q.gamma *
                                        log_gamma(q.beta + q.alpha * s)) *
                   LogComplex::from_log(s * lmz);
          }},
      p);
}

}  // namespace detail

cplx mb_integrand(const ParameterSet& p, const cplx& s, const cplx& z) {
  validate(p);
  const double n = std::round(s.real());
  if (std::hypot(s.real() - n, s.imag()) < 1e-12)
    throw PoleError("mb_integrand: s at an integer pole of Gamma(s)Gamma(1-s)");
  const cplx lmz(std::log(std::abs(z)), BranchRule::arg_minus(z));
  return detail::mb_integrand_log(p, s, lmz).to_complex();
}

Evaluation mb_evaluate(const ParameterSet& p, const cplx& z,
                       const ContourSpec& contour) {
  validate(p);
  const cplx lmz(std::log(std::abs(z)), BranchRule::arg_minus(z));
  LogComplex additive = LogComplex::zero();
  if (const auto* lr = std::get_if<LeRoy>(&p))
    additive = LogComplex::from_log(-lr->gamma * log_gamma(lr->beta));
  return contour_integral(
      p, [&](const cplx& s) { return detail::mb_integrand_log(p, s, lmz); }, z,
      contour, additive);
}

Evaluation mb_param_derivative(const Ml2& p, ParamTarget target, const cplx& z,
                               const ContourSpec& contour) {
  if (target != ParamTarget::alpha && target != ParamTarget::beta)
    throw DomainError("mb_param_derivative: target must be alpha or beta");
  // Stated validity domain of the derivative representation.
  if (!(p.alpha.imag() == 0.0 && p.alpha.real() > 0.0 && p.beta.imag() == 0.0 &&
        p.beta.real() >= 0.0))
    throw DomainError("mb_param_derivative: requires alpha > 0, beta >= 0 real");
  const cplx lmz(std::log(std::abs(z)), BranchRule::arg_minus(z));
  const ParameterSet ps = p;
  auto ig = [&](const cplx& s) {
    // psi(beta-alpha s)/Gamma(beta-alpha s) is entire; the extra factor is
    // +s for the alpha-derivative and -1 for the beta-derivative.
    const LogComplex lead = (target == ParamTarget::alpha)
                                ? LogComplex::from_complex(s)
                                : LogComplex::from_real(-1.0);
    return lead * LogComplex::from_complex(pole_safe_pi_over_sin(s)) *
           psi_over_gamma_log(p.beta - p.alpha * s) *
           LogComplex::from_log(-s * lmz);
  };
  return contour_integral(ps, ig, z, contour, LogComplex::zero());
}

IntegrandDecayReport audit_integrand_decay(const Ml2& p,
                                           const ContourSpec& contour,
                                           const std::vector<double>& x_grid,
                                           const cplx& z) {
  contour.validate();
  for (size_t i = 0; i + 1 < x_grid.size(); ++i)
    if (!(x_grid[i + 1] > x_grid[i]) || x_grid[i] < 0.0)
      throw DomainError("audit_integrand_decay: grid must be non-negative increasing");
  const cplx lmz(std::log(std::abs(z)), BranchRule::arg_minus(z));
  const double phi = contour.phi;
  const double bound = kPi / std::sinh(kPi * phi);
  const ParameterSet ps = p;

  IntegrandDecayReport report;
  report.pass_bound = true;
  std::vector<double> mags;  // worse ray, for the decay check
  for (double x : x_grid) {
    for (int side : {+1, -1}) {
      const cplx s(-x, side * phi);
      DecayRayRecord rec;
      rec.x = x;
      rec.side = side;
      // Reflection product evaluated through log_gamma on both factors.
      rec.product = std::exp(log_gamma(s).real() + log_gamma(1.0 - s).real());
      rec.bound = bound;
      rec.pass_bound = rec.product <= bound * (1.0 + 1e-12);
      const LogComplex ig = detail::mb_integrand_log(ps, s, lmz);
      rec.integrand_log_mag = ig.is_zero() ? -1e300 : ig.log_mag;
      report.pass_bound = report.pass_bound && rec.pass_bound;
      report.records.push_back(rec);
      if (side == +1) mags.push_back(rec.integrand_log_mag);
    }
  }

  // Monotone decay after the crossover (the global maximum of the log
  // magnitude), and a negligible tail at the truncation end.
  size_t imax = 0;
  for (size_t i = 1; i < mags.size(); ++i)
    if (mags[i] > mags[imax]) imax = i;
  report.crossover_x = x_grid[imax];
  bool decay = true;
  for (size_t i = imax; i + 1 < mags.size(); ++i)
    if (!(mags[i + 1] < mags[i] + 1e-12)) decay = false;
  if (!mags.empty()) decay = decay && (mags.back() < mags[imax] - 46.0);
  report.pass_decay = decay;
  report.pass = report.pass_bound && report.pass_decay;
  return report;
}

}  // namespace mlpd
