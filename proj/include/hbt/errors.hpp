#pragma once

#include <stdexcept>
#include <string>

namespace hbt {

/// Parameters violate |m|^2 <= n(n+1) (or the two-mode analogue).
class NonPhysicalState : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quantity is undefined at this point of parameter space (n = 0, vacuum fringes, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotPRepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A real-squeezing formula was handed a complex squeezing parameter.
class UnsupportedPhase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Least-squares design matrix is rank deficient or too badly conditioned.
class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated Fock density lost more than the allowed trace weight.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double deficit)
      : std::runtime_error(what), deficit_(deficit) {}
  double deficit() const noexcept { return deficit_; }

 private:
  double deficit_;
};

/// The cutoff schedule was exhausted without a converged verdict.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hbt
