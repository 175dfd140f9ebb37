#pragma once

// Globally adaptive Gauss-Kronrod (10/21 point) quadrature with interval
// bisection, plus the two variable changes the force integrals need.

#include <functional>

namespace proxforce {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  /// Maximum number of bisections applied to any one interval.
  int max_depth = 60;
  /// Hard cap on the number of live subintervals.
  int max_intervals = 4000;

  /// Throws DomainError unless both tolerances are positive.
  void validate() const;
};

struct Integral {
  double value = 0.0;
  /// The scheme's own error estimate; not a rigorous bound.
  double error = 0.0;
  long evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Integral of f over [lo, hi]. Throws QuadratureError when the tolerance
/// cannot be met within the depth/interval limits, NonFiniteIntegrand when
/// f returns NaN or infinity.
Integral integrate(const Integrand& f, double lo, double hi,
                   const QuadratureConfig& cfg = {});

/// Integral of f(r) over [0, r_max] evaluated in theta with r = r_max sin(theta).
/// Removes the derivative singularity of sqrt(r_max^2 - r^2) at the rim.
Integral integrate_radial(const Integrand& f, double r_max,
                          const QuadratureConfig& cfg = {});

/// Integral of f over [lo, inf) with x = lo + scale t / (1 - t).
/// `scale` should be the length over which f varies.
Integral integrate_to_infinity(const Integrand& f, double lo, double scale,
                               const QuadratureConfig& cfg = {});

}  // namespace proxforce
