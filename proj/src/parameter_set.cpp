#include "mlpd/parameter_set.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "mlpd/format.hpp"

namespace mlpd {

namespace {

bool is_nonpositive_integer(const cplx& g) {
  return g.imag() == 0.0 && g.real() <= 0.0 && g.real() == std::floor(g.real());
}

}  // namespace

const char* family_name(const ParameterSet& p) {
  return std::visit(detail::overloaded{[](const Ml2&) { return "ml2"; },
                                       [](const Ml3&) { return "ml3"; },
                                       [](const Ml4&) { return "ml4"; },
                                       [](const Wright&) { return "wright"; },
                                       [](const LeRoy&) { return "leroy"; }},
                    p);
}

void validate(const ParameterSet& p) {
  std::visit(
      detail::overloaded{
          [](const Ml2& q) {
            if (!(q.alpha.real() > 0.0))
              throw DomainError("ml2: requires Re(alpha) > 0");
          },
          [](const Ml3& q) {
            if (!(q.alpha.real() > 0.0))
              throw DomainError("ml3: requires Re(alpha) > 0");
            if (is_nonpositive_integer(q.gamma))
              throw DomainError("ml3: gamma must not be 0, -1, -2, ...");
          },
          [](const Ml4& q) {
            if (!(q.alpha1.real() + q.alpha2.real() > 0.0))
              throw DomainError("ml4: requires Re(alpha1 + alpha2) > 0");
          },
          [](const Wright& q) {
            if (!(q.alpha.real() > -1.0))
              throw DomainError("wright: requires Re(alpha) > -1");
          },
          [](const LeRoy& q) {
            if (!(q.alpha.real() > 0.0))
              throw DomainError("leroy: requires Re(alpha) > 0");
            if (!(q.gamma > 0.0)) throw DomainError("leroy: requires gamma > 0");
          }},
      p);
}

bool target_applicable(const ParameterSet& p, ParamTarget t) {
  return std::visit(
      detail::overloaded{
          [&](const Ml2&) {
            return t == ParamTarget::alpha || t == ParamTarget::beta;
          },
          [&](const Ml3&) {
            return t == ParamTarget::alpha || t == ParamTarget::beta ||
                   t == ParamTarget::gamma;
          },
          [&](const Ml4&) {
            return t == ParamTarget::alpha1 || t == ParamTarget::beta1 ||
                   t == ParamTarget::alpha2 || t == ParamTarget::beta2;
          },
          [&](const Wright&) {
            return t == ParamTarget::alpha || t == ParamTarget::beta;
          },
          [&](const LeRoy&) {
            return t == ParamTarget::alpha || t == ParamTarget::beta ||
                   t == ParamTarget::gamma;
          }},
      p);
}

ParameterSet nudged(const ParameterSet& p, ParamTarget t, const cplx& delta) {
  if (!target_applicable(p, t))
    throw DomainError(std::string("target ") + to_string(t) +
                      " does not apply to family " + family_name(p));
  ParameterSet q = p;
  std::visit(detail::overloaded{
                 [&](Ml2& r) {
                   (t == ParamTarget::alpha ? r.alpha : r.beta) += delta;
                 },
                 [&](Ml3& r) {
                   if (t == ParamTarget::alpha)
                     r.alpha += delta;
                   else if (t == ParamTarget::beta)
                     r.beta += delta;
                   else
                     r.gamma += delta;
                 },
                 [&](Ml4& r) {
                   if (t == ParamTarget::alpha1)
                     r.alpha1 += delta;
                   else if (t == ParamTarget::beta1)
                     r.beta1 += delta;
                   else if (t == ParamTarget::alpha2)
                     r.alpha2 += delta;
                   else
                     r.beta2 += delta;
                 },
                 [&](Wright& r) {
                   (t == ParamTarget::alpha ? r.alpha : r.beta) += delta;
                 },
                 [&](LeRoy& r) {
                   if (t == ParamTarget::gamma) {
                     if (delta.imag() != 0.0)
                       throw DomainError("leroy: gamma is real");
                     r.gamma += delta.real();
                   } else {
                     (t == ParamTarget::alpha ? r.alpha : r.beta) += delta;
                   }
                 }},
             q);
  return q;
}

const char* to_string(ParamTarget t) {
  switch (t) {
    case ParamTarget::alpha: return "alpha";
    case ParamTarget::beta: return "beta";
    case ParamTarget::gamma: return "gamma";
    case ParamTarget::alpha1: return "alpha1";
    case ParamTarget::beta1: return "beta1";
    case ParamTarget::alpha2: return "alpha2";
    case ParamTarget::beta2: return "beta2";
  }
  return "?";
}

std::optional<ParamTarget> target_from_string(std::string_view s) {
  if (s == "alpha") return ParamTarget::alpha;
  if (s == "beta") return ParamTarget::beta;
  if (s == "gamma") return ParamTarget::gamma;
  if (s == "alpha1") return ParamTarget::alpha1;
  if (s == "beta1") return ParamTarget::beta1;
  if (s == "alpha2") return ParamTarget::alpha2;
  if (s == "beta2") return ParamTarget::beta2;
  return std::nullopt;
}

std::string describe(const ParameterSet& p) {
  std::string s = family_name(p);
  std::visit(
      detail::overloaded{
          [&](const Ml2& q) {
            s += " alpha=" + format_complex(q.alpha) +
                 " beta=" + format_complex(q.beta);
          },
          [&](const Ml3& q) {
            s += " alpha=" + format_complex(q.alpha) +
                 " beta=" + format_complex(q.beta) +
                 " gamma=" + format_complex(q.gamma);
          },
          [&](const Ml4& q) {
            s += " alpha1=" + format_complex(q.alpha1) +
                 " beta1=" + format_complex(q.beta1) +
                 " alpha2=" + format_complex(q.alpha2) +
                 " beta2=" + format_complex(q.beta2);
          },
          [&](const Wright& q) {
            s += " alpha=" + format_complex(q.alpha) +
                 " beta=" + format_complex(q.beta);
          },
          [&](const LeRoy& q) {
            s += " alpha=" + format_complex(q.alpha) +
                 " beta=" + format_complex(q.beta) + " gamma=" + fmt_g17(q.gamma);
          }},
      p);
  return s;
}

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(const cplx& z) {
  const bool neg = std::signbit(z.imag());
  return fmt_g17(z.real()) + (neg ? "-" : "+") + fmt_g17(std::fabs(z.imag())) +
         "i";
}

cplx parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("empty complex literal");

  auto to_double = [](const std::string& t) {
    if (t.empty()) throw DomainError("malformed complex literal");
    const char* begin = t.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + t.size())
      throw DomainError("cannot parse number '" + t + "'");
    return v;
  };

  // Last '+'/'-' that is not an exponent sign splits real and imaginary part.
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
      split = i;
  }
  if (split != std::string::npos && s.back() == 'i') {
    const std::string re = s.substr(0, split);
    const std::string im = s.substr(split, s.size() - split - 1);
    return {to_double(re), to_double(im)};
  }
  if (s.back() == 'i') return {0.0, to_double(s.substr(0, s.size() - 1))};
  return {to_double(s), 0.0};
}

}  // namespace mlpd
