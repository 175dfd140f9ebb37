#pragma once

// Proximity force approximation engine.
//
// General form: the force on a curved body is the integral of the known
// parallel-plate pressure over opposing surface elements, with the local
// separation and local upper-body thickness taken from the gap profile.
// Only axisymmetric gaps are supported; the integral reduces to
//   F = integral_0^{r_max} P(z(r), D2(r)) 2 pi r dr.
//
// Simplified form: F = 2 pi sqrt(Rx Ry) E(a), valid only when the pressure
// decays to zero within the extent of the curved body. Whether it does is
// declared by the caller; gravity's plate-plate pressure does not.

#include <functional>

#include "proxforce/force_result.hpp"
#include "proxforce/geometry.hpp"
#include "proxforce/quadrature.hpp"

namespace proxforce {

enum class Decay { Decaying, NonDecaying };

struct PressureProfile {
  /// Plate-plate pressure (Pa) at separation z >= a for an upper plate of
  /// local thickness d2 >= 0. Must be deterministic and reentrant.
  std::function<double(double z, double d2)> pressure;
  Decay decay = Decay::Decaying;
};

struct AxisymmetricGap {
  std::function<double(double r)> gap;
  std::function<double(double r)> thickness;
  double r_max = 0.0;

  /// Ball of the given radius whose lowest point is `a` above the plate.
  static AxisymmetricGap sphere(double radius, double a);
};

struct CurvatureData {
  CurvatureData(double rx, double ry);

  double rx;
  double ry;
  /// Geometric mean sqrt(Rx Ry).
  double mean_radius() const noexcept;
};

/// General PFA integral by adaptive radial quadrature. Method tag
/// PfaGeneral, error_estimate from the quadrature.
ForceResult pfa_general(const PressureProfile& profile,
                        const AxisymmetricGap& gap,
                        const QuadratureConfig& quad = {});

/// Simplified PFA, 2 pi R_bar E(a). Throws PreconditionViolation for a
/// NON_DECAYING profile without evaluating `energy_per_area`.
ForceResult pfa_simple(const std::function<double(double a)>& energy_per_area,
                       const CurvatureData& curvature, double a, Decay decay);

}  // namespace proxforce
