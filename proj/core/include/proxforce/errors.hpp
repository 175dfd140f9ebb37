#pragma once

#include <stdexcept>
#include <string>

namespace proxforce {

/// Argument outside the domain of an operation (non-positive radius,
/// overlapping bodies, infinite thickness where a force diverges, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A method was applied to a configuration that violates its declared
/// precondition. Raised instead of returning a number.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Adaptive quadrature stopped before reaching the requested tolerance.
/// Carries the best estimate and the error actually achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best_estimate,
                  double achieved_error)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        achieved_error_(achieved_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double best_estimate_;
  double achieved_error_;
};

/// The integrand returned NaN or infinity. `where()` is the abscissa.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  NonFiniteIntegrand(const std::string& what, double where)
      : std::runtime_error(what), where_(where) {}

  double where() const noexcept { return where_; }

 private:
  double where_;
};

}  // namespace proxforce
