#pragma once

#include <stdexcept>
#include <string>

namespace mlpd {

// Argument hit (or got within 1e-300 of) a pole of Gamma / digamma.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameters or arguments outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// z lies on the branch cut of (-z)^{-s} (the negative real axis) or at 0.
class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unknown audit name or malformed configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mlpd
