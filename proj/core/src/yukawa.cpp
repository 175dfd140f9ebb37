#include "proxforce/yukawa.hpp"

#include <cmath>
#include <numbers>

#include "proxforce/errors.hpp"

namespace proxforce {

namespace {

constexpr double kPi = std::numbers::pi;

// Numerator of Phi written in t = 2/x: t - 2 + (t + 2) e^{-t}, whose Taylor
// series starts at t^3/6; coefficients (-1)^{n+1} (n - 2) / n!.
double phi_numerator_series(double t) {
  double term = t * t / 2.0;  // t^n / n! at n = 2
  double sum = 0.0;
  for (int n = 3; n < 60; ++n) {
    term *= t / n;
    const double c = (n % 2 == 1 ? 1.0 : -1.0) * (n - 2) * term;
    sum += c;
    if (std::abs(c) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double yukawa_pair_potential(double distance, double m1, double m2,
                             const YukawaParams& p, double G) {
  if (!(distance > 0.0)) throw DomainError("pair distance must be positive");
  return -G * m1 * m2 * p.alpha() * exp_neg(distance / p.lambda()) / distance;
}

double yukawa_point_plate_energy(const PointMass& m, const Plate& plate,
                                 const YukawaParams& p, double G) {
  const double lambda = p.lambda();
  return -2.0 * kPi * G * m.mass() * plate.density() * p.alpha() * lambda *
         lambda * exp_neg(m.height() / lambda) *
         plate.thickness().screening_factor(lambda);
}

double yukawa_point_plate_force(const PointMass& m, const Plate& plate,
                                const YukawaParams& p, double G) {
  const double lambda = p.lambda();
  return -2.0 * kPi * G * m.mass() * plate.density() * p.alpha() * lambda *
         exp_neg(m.height() / lambda) *
         plate.thickness().screening_factor(lambda);
}

double sphere_finite_size_factor(double x) {
  if (!(x > 0.0)) throw DomainError("lambda / R must be positive");
  if (std::isinf(x)) return 0.0;
  const double t = 2.0 / x;
  if (t < 2.0) return phi_numerator_series(t) / t;
  return (1.0 - x) + exp_neg(t) * (1.0 + x);
}

double yukawa_sphere_plate_force_exact(const Sphere& sphere,
                                       const Plate& plate, const Gap& gap,
                                       const YukawaParams& p, double G) {
  const double lambda = p.lambda();
  const double r = sphere.radius();
  return -4.0 * kPi * kPi * G * plate.density() * sphere.density() *
         p.alpha() * lambda * lambda * lambda *
         plate.thickness().screening_factor(lambda) * r *
         exp_neg(gap.separation() / lambda) *
         sphere_finite_size_factor(lambda / r);
}

double yukawa_plate_plate_pressure(const Plate& lower, const Plate& upper,
                                   const Gap& gap, const YukawaParams& p,
                                   double G) {
  const double lambda = p.lambda();
  return -2.0 * kPi * G * lower.density() * upper.density() * p.alpha() *
         lambda * lambda * exp_neg(gap.separation() / lambda) *
         lower.thickness().screening_factor(lambda) *
         upper.thickness().screening_factor(lambda);
}

double yukawa_plate_plate_energy(const Plate& lower, const Plate& upper,
                                 const Gap& gap, const YukawaParams& p,
                                 double G) {
  return yukawa_plate_plate_pressure(lower, upper, gap, p, G) * p.lambda();
}

PressureProfile yukawa_plate_profile(const Plate& lower, double upper_density,
                                     const YukawaParams& p, double G) {
  const double lambda = p.lambda();
  const double coeff = -2.0 * kPi * G * lower.density() * upper_density *
                       p.alpha() * lambda * lambda *
                       lower.thickness().screening_factor(lambda);
  return PressureProfile{
      [coeff, lambda](double z, double d2) {
        return coeff * exp_neg(z / lambda) * -std::expm1(-d2 / lambda);
      },
      Decay::Decaying};
}

ForceResult yukawa_sphere_plate_force_pfa_general(
    const Sphere& sphere, const Plate& plate, const Gap& gap,
    const YukawaParams& p, const QuadratureConfig& quad, double G) {
  ForceResult out =
      pfa_general(yukawa_plate_profile(plate, sphere.density(), p, G),
                  AxisymmetricGap::sphere(sphere.radius(), gap.separation()),
                  quad);
  out.with("lambda_over_R", p.lambda() / sphere.radius());
  return out;
}

ForceResult yukawa_sphere_plate_force_pfa_simple(const Sphere& sphere,
                                                 const Plate& plate,
                                                 const Gap& gap,
                                                 const YukawaParams& p,
                                                 double G) {
  const Plate thick_upper(sphere.density(), Thickness::infinite());
  auto energy = [&](double a) {
    return yukawa_plate_plate_energy(plate, thick_upper, Gap(a), p, G);
  };
  const double x = p.lambda() / sphere.radius();
  ForceResult out =
      pfa_simple(energy, CurvatureData(sphere.radius(), sphere.radius()),
                 gap.separation(), Decay::Decaying);
  out.with("lambda_over_R", x);
  out.with("sphere_diameter_over_lambda", 2.0 / x);
  // simple / exact = 1 / Phi for the ball.
  out.with("expected_rel_deviation", 1.0 / sphere_finite_size_factor(x) - 1.0);
  return out;
}

}  // namespace proxforce
