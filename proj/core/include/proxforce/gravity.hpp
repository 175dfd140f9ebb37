#pragma once

// Newtonian gravity between a laterally infinite plate and a point mass,
// a ball, or a second plate. Closed forms are the primary path; the PFA
// route exists to cross-check them.

#include "proxforce/force_result.hpp"
#include "proxforce/geometry.hpp"
#include "proxforce/pfa.hpp"
#include "proxforce/quadrature.hpp"

namespace proxforce {

class PointMass {
 public:
  /// `height` is measured above the plate's upper face.
  PointMass(double mass, double height);

  double mass() const noexcept { return mass_; }
  double height() const noexcept { return height_; }

 private:
  double mass_;
  double height_;
};

/// -2 pi G m rho1 D1; independent of the height. Throws DomainError for an
/// infinitely thick plate, where the force diverges.
double grav_point_plate_force(const PointMass& m, const Plate& plate,
                              double G = kNewtonG);

/// -(8 pi^2 / 3) G rho1 rho2 D1 R^3; independent of the separation.
double grav_sphere_plate_force(const Sphere& sphere, const Plate& plate,
                               double G = kNewtonG);

/// -2 pi G rho1 rho2 D1 D2; independent of the separation.
double grav_plate_plate_pressure(const Plate& lower, const Plate& upper,
                                 double G = kNewtonG);

/// Plate-plate pressure as a PFA profile for an upper body of the given
/// density. Tagged NON_DECAYING. Accepts a local thickness of zero.
PressureProfile grav_plate_profile(const Plate& lower, double upper_density,
                                   double G = kNewtonG);

/// General PFA: plate-plate pressure integrated over the sphere's chord
/// profile. Agrees with grav_sphere_plate_force to quadrature tolerance.
ForceResult grav_sphere_plate_force_pfa(const Sphere& sphere,
                                        const Plate& plate,
                                        const QuadratureConfig& quad = {},
                                        double G = kNewtonG);

/// Simplified PFA applied to gravity. Always throws PreconditionViolation.
ForceResult grav_sphere_plate_force_pfa_simple(const Sphere& sphere,
                                               const Plate& plate,
                                               const Gap& gap,
                                               double G = kNewtonG);

}  // namespace proxforce
