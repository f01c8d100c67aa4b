#pragma once

#include <cmath>

#include "doctest.h"
#include "mlpd/complex_log.hpp"

namespace mlpd_test {

inline double rel_err(const mlpd::cplx& got, const mlpd::cplx& want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

inline void check_close(const mlpd::cplx& got, const mlpd::cplx& want,
                        double rel_tol) {
  INFO("got  = ", got.real(), " + ", got.imag(), "i");
  INFO("want = ", want.real(), " + ", want.imag(), "i");
  CHECK(rel_err(got, want) <= rel_tol);
}

inline void check_close_abs(const mlpd::cplx& got, const mlpd::cplx& want,
                            double abs_tol) {
  INFO("got  = ", got.real(), " + ", got.imag(), "i");
  INFO("want = ", want.real(), " + ", want.imag(), "i");
  CHECK(std::abs(got - want) <= abs_tol);
}

}  // namespace mlpd_test
