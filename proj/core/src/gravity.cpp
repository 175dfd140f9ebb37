#include "proxforce/gravity.hpp"

#include <limits>
#include <numbers>
#include <string>

#include "proxforce/errors.hpp"

namespace proxforce {

namespace {

constexpr double kPi = std::numbers::pi;

double finite_thickness(const Plate& plate) {
  if (plate.thickness().is_infinite()) {
    throw DomainError(
        "gravitational force of an infinitely thick plate diverges");
  }
  return plate.thickness().metres();
}

}  // namespace

PointMass::PointMass(double mass, double height)
    : mass_(mass), height_(height) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError("point mass must be positive");
  }
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw DomainError("point mass height must be positive");
  }
}

double grav_point_plate_force(const PointMass& m, const Plate& plate,
                              double G) {
  return -2.0 * kPi * G * m.mass() * plate.density() * finite_thickness(plate);
}

double grav_sphere_plate_force(const Sphere& sphere, const Plate& plate,
                               double G) {
  const double r = sphere.radius();
  return -8.0 * kPi * kPi / 3.0 * G * plate.density() * sphere.density() *
         finite_thickness(plate) * r * r * r;
}

double grav_plate_plate_pressure(const Plate& lower, const Plate& upper,
                                 double G) {
  return -2.0 * kPi * G * lower.density() * upper.density() *
         finite_thickness(lower) * finite_thickness(upper);
}

PressureProfile grav_plate_profile(const Plate& lower, double upper_density,
                                   double G) {
  const double coeff =
      -2.0 * kPi * G * lower.density() * upper_density * finite_thickness(lower);
  return PressureProfile{[coeff](double /*z*/, double d2) { return coeff * d2; },
                         Decay::NonDecaying};
}

ForceResult grav_sphere_plate_force_pfa(const Sphere& sphere,
                                        const Plate& plate,
                                        const QuadratureConfig& quad,
                                        double G) {
  // The sphere's lowest point sits at an arbitrary positive height; the
  // gravitational pressure does not depend on the separation.
  const auto gap = AxisymmetricGap::sphere(sphere.radius(), sphere.radius());
  return pfa_general(grav_plate_profile(plate, sphere.density(), G), gap, quad);
}

ForceResult grav_sphere_plate_force_pfa_simple(const Sphere& sphere,
                                               const Plate& plate,
                                               const Gap& gap, double G) {
  (void)finite_thickness(plate);
  (void)G;
  // Energy per area relative to infinite separation diverges.
  auto energy = [](double) { return -std::numeric_limits<double>::infinity(); };
  return pfa_simple(energy, CurvatureData(sphere.radius(), sphere.radius()),
                    gap.separation(), Decay::NonDecaying);
}

}  // namespace proxforce
