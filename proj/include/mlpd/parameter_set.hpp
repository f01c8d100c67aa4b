#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mlpd/complex_log.hpp"
#include "mlpd/errors.hpp"

namespace mlpd {

// The five coefficient families.
//   Ml2    : sum z^k / Gamma(alpha k + beta)
//   Ml3    : sum (gamma)_k z^k / (k! Gamma(alpha k + beta))   (Prabhakar)
//   Ml4    : sum z^k / (Gamma(a1 k + b1) Gamma(a2 k + b2))
//   Wright : sum z^k / (k! Gamma(alpha k + beta)) = Ml4 with (a2,b2) = (1,1)
//   LeRoy  : sum z^k / [Gamma(alpha k + beta)]^gamma, gamma real > 0
struct Ml2 {
  cplx alpha, beta;
};
struct Ml3 {
  cplx alpha, beta, gamma;
};
struct Ml4 {
  cplx alpha1, beta1, alpha2, beta2;
};
struct Wright {
  cplx alpha, beta;
};
struct LeRoy {
  cplx alpha, beta;
  double gamma = 1.0;
};

using ParameterSet = std::variant<Ml2, Ml3, Ml4, Wright, LeRoy>;

enum class ParamTarget { alpha, beta, gamma, alpha1, beta1, alpha2, beta2 };

const char* family_name(const ParameterSet& p);

// Domain checks:
//   Ml2/Ml3: Re alpha > 0; Ml3 additionally gamma not in {0, -1, -2, ...}
//   Ml4: Re(alpha1 + alpha2) > 0
//   Wright: Re alpha > -1
//   LeRoy: Re alpha > 0, gamma > 0
// Throws DomainError with a message naming the violated constraint.
void validate(const ParameterSet& p);

bool target_applicable(const ParameterSet& p, ParamTarget t);

// Returns a copy with the target parameter shifted by delta. LeRoy gamma is
// real, so a nonzero imaginary delta there is a DomainError.
ParameterSet nudged(const ParameterSet& p, ParamTarget t, const cplx& delta);

const char* to_string(ParamTarget t);
std::optional<ParamTarget> target_from_string(std::string_view s);

// "ml2 alpha=1+0i beta=1+0i" style descriptor.
std::string describe(const ParameterSet& p);

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace detail

}  // namespace mlpd
