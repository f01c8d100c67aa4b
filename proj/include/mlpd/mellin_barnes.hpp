#pragma once

#include <vector>

#include "mlpd/series.hpp"

namespace mlpd {

// Left-loop (hairpin) contour: from -x_max - i phi rightward to c - i phi,
// vertically to c + i phi, then leftward to -x_max + i phi. It encloses the
// poles of Gamma(s) at 0, -1, -2, ... and leaves the poles of Gamma(1-s)
// outside. The LeRoy family uses the mirrored right loop around s = 1, 2, ...
// traversed clockwise, plus the additive 1/Gamma(beta)^gamma term.
struct ContourSpec {
  double c = 0.5;          // crossing point, 0 < c < 1
  double phi = 1.0;        // half-offset of the horizontal legs
  double x_max = 0.0;      // leg truncation; <= 0 means adaptive (capped at 400)
  double quad_tol = 1e-10; // absolute quadrature tolerance
  long max_nodes = 200000;

  void validate() const;
};

// (-z)^{-s} = exp(-s [ln|z| + i arg(-z)]) with arg(-z) in (-pi, pi].
// Inputs on the negative real axis (arg z = pi) are a BranchError.
struct BranchRule {
  static double arg_minus(const cplx& z);
};

// Integrand of the Mellin-Barnes representation at a point s off the integer
// poles of Gamma(s)Gamma(1-s); the Gamma pair is evaluated through the
// reflection formula pi/sin(pi s).
cplx mb_integrand(const ParameterSet& p, const cplx& s, const cplx& z);

// (1/2 pi i) times the contour integral; the independent pathway against the
// power series. Parameter derivatives are provided for Ml2 only, where the
// integrand gains the factor s psi(beta - alpha s) (alpha) or
// -psi(beta - alpha s) (beta).
Evaluation mb_evaluate(const ParameterSet& p, const cplx& z,
                       const ContourSpec& contour = {});
Evaluation mb_param_derivative(const Ml2& p, ParamTarget target, const cplx& z,
                               const ContourSpec& contour = {});

// On the rays s = -x +- i phi checks (i) the reflection-product bound
// |Gamma(-x+-i phi) Gamma(1+x-+i phi)| <= pi/sinh(pi phi) and (ii) that the
// full integrand magnitude decays monotonically once past its crossover and
// is negligible at the truncation end.
struct DecayRayRecord {
  double x = 0.0;
  int side = +1;  // +1: upper ray, -1: lower ray
  double product = 0.0;
  double bound = 0.0;
  double integrand_log_mag = 0.0;
  bool pass_bound = false;
};

struct IntegrandDecayReport {
  std::vector<DecayRayRecord> records;
  double crossover_x = 0.0;
  bool pass_bound = false;
  bool pass_decay = false;
  bool pass = false;
};

IntegrandDecayReport audit_integrand_decay(const Ml2& p,
                                           const ContourSpec& contour,
                                           const std::vector<double>& x_grid,
                                           const cplx& z = cplx(1.0, 0.0));

namespace detail {
LogComplex mb_integrand_log(const ParameterSet& p, const cplx& s,
                            const cplx& log_minus_z);
}

}  // namespace mlpd
