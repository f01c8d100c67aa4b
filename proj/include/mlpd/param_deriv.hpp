#pragma once

#include <vector>

#include "mlpd/series.hpp"

namespace mlpd {

// k-th coefficient of the term-by-term parameter-derivative series.
// For alpha-type targets the k = 0 coefficient is exactly zero (those sums
// start at k = 1); beta- and gamma-type series include the k = 0 term.
LogComplex deriv_coefficient_log(const ParameterSet& p, ParamTarget target,
                                 long k);
cplx deriv_coefficient(const ParameterSet& p, ParamTarget target, long k);

// dF/d(target), summed under the policy; same convergence contract as
// evaluate_series. At z = 0 alpha-type targets return exactly 0.
Evaluation evaluate_param_derivative(const ParameterSet& p, ParamTarget target,
                                     const cplx& z,
                                     const TruncationPolicy& policy = {});

// Uniform-majorant audit for the alpha-derivative series of Ml2 on a box
// alpha in [a,b], beta in [0,B]:
//   |k psi(alpha k + beta) / Gamma(alpha k + beta) z^k|
//     <= k ln(b k + B + e^{1-gamma} - 2) / Gamma(a k) |z|^k
// valid for k above k0 = max{2/a, (3 - B - e^{1-gamma})/b, 1}. Both sides are
// compared in log space; |z|^k cancels exactly.
struct MajorantBox {
  double alpha_lo = 0.5;
  double alpha_hi = 1.0;
  double beta_hi = 2.0;
  cplx z{2.0, 0.0};
  long k_lo = 10;
  long k_hi = 60;
  int alpha_samples = 5;
  int beta_samples = 5;
};

struct MajorantRecord {
  double alpha = 0.0, beta = 0.0;
  long k = 0;
  double margin = 0.0;  // log RHS - log LHS, >= 0 when the bound holds
  bool pass = false;
};

struct MajorantReport {
  long k0 = 0;
  std::vector<MajorantRecord> records;
  bool pass = false;
};

MajorantReport audit_uniform_majorant(const MajorantBox& box);

namespace detail {
LogComplex deriv_coefficient_log_unchecked(const ParameterSet& p,
                                           ParamTarget target, long k);
}

}  // namespace mlpd
