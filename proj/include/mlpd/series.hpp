#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mlpd/complex_log.hpp"
#include "mlpd/parameter_set.hpp"

namespace mlpd {

enum class TailMode { geometric_ratio, last_term };
enum class Method { series, mellin_barnes, finite_difference };

const char* to_string(Method m);

struct TruncationPolicy {
  double rel_tol = 1e-12;
  long max_terms = 100000;
  int small_run = 3;  // consecutive small terms required before stopping
  TailMode tail_mode = TailMode::geometric_ratio;

  void validate() const;
};

struct Evaluation {
  cplx value{};
  double abs_err_est = 0.0;
  long terms_used = 0;  // series terms or quadrature nodes
  Method method = Method::series;
  bool converged = false;
  // Scale-safe diagnostics: value can overflow the double range (the series
  // converge for every z), these fields never do.
  LogComplex value_log{};
  double log_abs_err = -std::numeric_limits<double>::infinity();
};

// k-th Taylor coefficient of the family. Assembled in log space; a pole of
// Gamma zeroes the coefficient exactly for the 1/Gamma families, and is a
// PoleError for LeRoy where the power of the pole is not removable.
LogComplex coefficient_log(const ParameterSet& p, long k);
cplx coefficient(const ParameterSet& p, long k);

// Partial sum under the policy. Stops after small_run consecutive terms below
// rel_tol * |partial sum| and once the tail estimate meets the convergence
// bound; exhausting max_terms returns converged = false with the best value.
Evaluation evaluate_series(const ParameterSet& p, const cplx& z,
                           const TruncationPolicy& policy = {});

// |a_k| / |a_{k+1}| for k = 1..k_max of the base (or derivative) coefficient
// sequence; a numerical witness that the radius of convergence is infinite.
std::vector<double> radius_probe(const ParameterSet& p,
                                 std::optional<ParamTarget> derivative_target,
                                 long k_max);

namespace detail {

LogComplex coefficient_log_unchecked(const ParameterSet& p, long k);

// Shared summation engine: Kahan-compensated accumulation of log-space terms
// with a running rescale, so magnitudes up to e^{+-10^8} stay representable.
Evaluation sum_power_series(const std::function<LogComplex(long)>& coeff,
                            const cplx& z, const TruncationPolicy& policy);

}  // namespace detail

}  // namespace mlpd
