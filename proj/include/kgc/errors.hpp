#pragma once

#include <stdexcept>
#include <string>

namespace kgc {

/// Base of every error raised by the library. `kind()` is a stable,
/// machine-readable tag used in CLI error records.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

class RangeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "range"; }
};

/// Coupling gamma = Z*alpha reached l + 1/2: no real effective angular
/// momentum, hence no bound state of that l.
class SupercriticalChargeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "supercritical_charge"; }
};

/// Integrand returned NaN or infinity at an interior node.
class EvaluationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "evaluation"; }
};

/// A functional whose integrand is not integrable at the origin was requested
/// without an inner cutoff.
class DivergenceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "divergence"; }
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_value, double best_error)
      : Error(what), best_value_(best_value), best_error_(best_error) {}
  const char* kind() const noexcept override { return "convergence"; }
  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

}  // namespace kgc
