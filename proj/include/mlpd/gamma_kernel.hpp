#pragma once

#include <vector>

#include "mlpd/complex_log.hpp"
#include "mlpd/errors.hpp"

namespace mlpd {

// Euler-Mascheroni constant, gamma = -psi(1).
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// log Gamma(z) on the branch that is continuous on the plane cut along the
// negative real axis and real on (0, inf). Values on the cut itself are the
// limits from the upper half plane. Throws PoleError within 1e-300 of a
// non-positive integer.
cplx log_gamma(const cplx& z);

// 1/Gamma(z); entire, exactly 0 at the poles of Gamma.
cplx recip_gamma(const cplx& z);
LogComplex recip_gamma_log(const cplx& z);

// psi(z) = Gamma'(z)/Gamma(z). Throws PoleError at non-positive integers.
cplx digamma(const cplx& z);

// psi(w)/Gamma(w) as a single entire function: the simple pole of psi at
// w = -m cancels against the zero of 1/Gamma, with limit (-1)^{m+1} m!.
LogComplex psi_over_gamma_log(const cplx& w);

// Two-term ratio expansion (alpha k)^alpha [1 + alpha(alpha-1)/(2 alpha k)]
// of Gamma(alpha(k+1)+beta)/Gamma(alpha k+beta). Used for tail-bound
// heuristics only, never for function values. Requires alpha k >= 1.
double gamma_ratio_asymptotic(double alpha, long k);

// Numerical audit of the two-sided digamma bounds
//   ln(x + 1/2) <= psi(x+1) <= ln(x + e^{-gamma})          (x > 0)
//   ln(x + 1/2) <= psi(x+1) <= ln(x + e^{1-gamma} - 1)     (x >= 1)
// The second upper bound is attained at x = 1 and the first as x -> 0, so
// pass allows a 5e-13 rounding guard at the equality points.
struct DigammaBoundRecord {
  double x = 0.0;
  double margin_lower = 0.0;   // psi(x+1) - ln(x + 1/2)
  double margin_upper3 = 0.0;  // ln(x + e^{-gamma}) - psi(x+1)
  bool has_eq9 = false;        // x >= 1 only
  double margin_upper9 = 0.0;  // ln(x + e^{1-gamma} - 1) - psi(x+1)
  bool pass = false;
};

struct DigammaBoundsReport {
  std::vector<DigammaBoundRecord> records;
  bool pass = false;
};

DigammaBoundsReport audit_digamma_bounds(const std::vector<double>& x_grid);

namespace detail {

// sin(pi z) with exact integer reduction of Re z.
cplx sinpi(const cplx& z);
// cot(pi z), same reduction.
cplx cotpi(const cplx& z);
// log sin(pi z), continuous for Im z >= 0, real on (0, 1).
cplx logsinpi_upper(const cplx& z);
// Stirling series with Bernoulli corrections; accurate for Re z >= 16 or
// |z| >= 18 with Re z >= 0.5.
cplx log_gamma_stirling(const cplx& z);
// Asymptotic psi(z) = log z - 1/(2z) - sum B_{2n}/(2n z^{2n}), n <= 5.
cplx digamma_asymptotic(const cplx& z);
// Distance from z to the nearest non-positive integer.
double dist_to_nonpositive_integer(const cplx& z);

}  // namespace detail

}  // namespace mlpd
