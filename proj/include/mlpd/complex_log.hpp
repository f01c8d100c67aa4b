#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace mlpd {

using cplx = std::complex<double>;

// Complex value stored as (log magnitude, phase). Gamma(alpha k + beta)
// leaves double range near k ~ 170/alpha, so every series coefficient is
// assembled in this representation and converted at the very end.
// The phase accumulates across multiplications; it is not reduced mod 2 pi.
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogComplex zero() { return {}; }
  static LogComplex one() { return {0.0, 0.0}; }

  static LogComplex from_complex(const cplx& w) {
    if (w.real() == 0.0 && w.imag() == 0.0) return zero();
    return {std::log(std::abs(w)), std::arg(w)};
  }

  // Interprets w as a logarithm: magnitude e^{Re w}, phase Im w.
  static LogComplex from_log(const cplx& w) { return {w.real(), w.imag()}; }

  static LogComplex from_real(double r) {
    if (r == 0.0) return zero();
    return {std::log(std::fabs(r)), r > 0.0 ? 0.0 : 3.14159265358979323846};
  }

  bool is_zero() const { return std::isinf(log_mag) && log_mag < 0.0; }

  cplx to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    const double m = std::exp(log_mag);
    return {m * std::cos(phase), m * std::sin(phase)};
  }

  LogComplex operator*(const LogComplex& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return {log_mag + o.log_mag, phase + o.phase};
  }

  LogComplex pow_int(long k) const {
    if (is_zero()) return k == 0 ? one() : zero();
    return {log_mag * static_cast<double>(k), phase * static_cast<double>(k)};
  }
};

}  // namespace mlpd
