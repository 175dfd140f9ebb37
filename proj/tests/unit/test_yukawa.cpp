#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "proxforce/errors.hpp"
#include "proxforce/yukawa.hpp"

namespace proxforce {
namespace {

constexpr double kPi = std::numbers::pi;

double phi_direct(double x) { return 1 - x + std::exp(-2 / x) * (1 + x); }

TEST(Yukawa, PairPotential) {
  const YukawaParams p(2.0, 0.5);
  EXPECT_DOUBLE_EQ(yukawa_pair_potential(1.0, 3.0, 4.0, p, 1.0), -12.0 * 2.0 * std::exp(-2.0));
  EXPECT_THROW((void)yukawa_pair_potential(0.0, 1.0, 1.0, p), DomainError);
}

TEST(Yukawa, PointPlateForceIsEnergyGradient) {
  const YukawaParams p(1.0, 1e-6);
  const Plate plate(3.0, Thickness::finite(2e-6));
  const double z = 0.7e-6, h = 1e-9;
  const double e_hi = yukawa_point_plate_energy(PointMass(1.0, z + h), plate, p);
  const double e_lo = yukawa_point_plate_energy(PointMass(1.0, z - h), plate, p);
  const double f = yukawa_point_plate_force(PointMass(1.0, z), plate, p);
  EXPECT_NEAR(-(e_hi - e_lo) / (2 * h) / f, 1.0, 1e-6);
  EXPECT_LT(f, 0.0);
}

TEST(FiniteSizeFactor, MatchesDirectFormWhereThatIsAccurate) {
  for (double x : {1e-3, 0.05, 0.3, 0.9, 1.0, 1.1, 2.0, 5.0}) {
    EXPECT_NEAR(sphere_finite_size_factor(x) / phi_direct(x), 1.0, 1e-12) << x;
  }
}

TEST(FiniteSizeFactor, Limits) {
  EXPECT_EQ(sphere_finite_size_factor(1e-4), 1.0 - 1e-4);
  for (double x : {1e2, 1e4, 1e8}) {
    EXPECT_NEAR(sphere_finite_size_factor(x) * 1.5 * x * x, 1.0, 2.0 / x) << x;
  }
  EXPECT_GT(sphere_finite_size_factor(1e12), 0.0);
}

TEST(FiniteSizeFactor, MonotoneDecreasing) {
  double prev = 1.0;
  for (double x = 1e-3; x < 1e3; x *= 1.1) {
    const double v = sphere_finite_size_factor(x);
    EXPECT_LT(v, prev) << x;
    prev = v;
  }
}

TEST(Yukawa, ExactSphereFormula) {
  const double r = 2.0, lambda = 0.5, a = 0.3, d1 = 1.0;
  const Sphere s(3.0, r);
  const Plate plate(5.0, Thickness::finite(d1));
  const YukawaParams p(7.0, lambda);
  const double expected = -4 * kPi * kPi * 1.0 * 5.0 * 3.0 * 7.0 * std::pow(lambda, 3) *
                          (1 - std::exp(-d1 / lambda)) * r * std::exp(-a / lambda) *
                          phi_direct(lambda / r);
  EXPECT_NEAR(yukawa_sphere_plate_force_exact(s, plate, Gap(a), p, 1.0) / expected, 1.0, 1e-14);
}

TEST(Yukawa, NegativeAlphaIsRepulsive) {
  const double f = yukawa_sphere_plate_force_exact(Sphere(1.0, 1.0), Plate(1.0, Thickness::infinite()),
                                                   Gap(0.1), YukawaParams(-1.0, 0.1));
  EXPECT_GT(f, 0.0);
}

TEST(Yukawa, FarSeparationUnderflowsToZero) {
  const double f = yukawa_sphere_plate_force_exact(Sphere(1.0, 1.0), Plate(1.0, Thickness::infinite()),
                                                   Gap(1e3), YukawaParams(1.0, 1e-3));
  EXPECT_EQ(f, 0.0);
}

TEST(Yukawa, PlatePressureAndEnergy) {
  const Plate lower(2.0, Thickness::finite(1e-6));
  const Plate upper(3.0, Thickness::infinite());
  const YukawaParams p(4.0, 1e-6);
  const Gap gap(0.5e-6);
  const double expected = -2 * kPi * 2.0 * 3.0 * 4.0 * 1e-12 * std::exp(-0.5) * (1 - std::exp(-1.0));
  EXPECT_NEAR(yukawa_plate_plate_pressure(lower, upper, gap, p, 1.0) / expected, 1.0, 1e-14);
  EXPECT_NEAR(yukawa_plate_plate_energy(lower, upper, gap, p, 1.0) / (expected * 1e-6), 1.0, 1e-14);
}

TEST(Yukawa, PressureIsMinusEnergyDerivative) {
  const Plate lower(2.0, Thickness::finite(0.3e-6));
  const Plate upper(3.0, Thickness::finite(2e-6));
  const YukawaParams p(1.0, 0.4e-6);
  const double a = 0.25e-6, h = p.lambda() / 1e3;
  const double de = yukawa_plate_plate_energy(lower, upper, Gap(a + h), p) -
                    yukawa_plate_plate_energy(lower, upper, Gap(a - h), p);
  EXPECT_NEAR(-de / (2 * h) / yukawa_plate_plate_pressure(lower, upper, Gap(a), p), 1.0, 1e-6);
}

TEST(Yukawa, ProfileDecays) {
  const auto prof = yukawa_plate_profile(Plate(1.0, Thickness::infinite()), 1.0, YukawaParams(1.0, 1.0));
  EXPECT_EQ(prof.decay, Decay::Decaying);
  EXPECT_EQ(prof.pressure(1.0, 0.0), 0.0);
  EXPECT_LT(std::abs(prof.pressure(10.0, 1.0)), std::abs(prof.pressure(1.0, 1.0)));
}

TEST(Yukawa, SimplifiedPfaDeviationAndDiagnostics) {
  const Sphere s(1.0, 148.7e-6);
  const Plate plate(1.0, Thickness::infinite());
  const Gap gap(0.2e-6);
  const YukawaParams p(1.0, 0.1e-6);
  const auto simple = yukawa_sphere_plate_force_pfa_simple(s, plate, gap, p);
  const double exact = yukawa_sphere_plate_force_exact(s, plate, gap, p);
  EXPECT_NEAR(simple.value / exact - 1.0, 6.72e-4, 1e-6);
  EXPECT_EQ(simple.method, Method::PfaSimple);
  EXPECT_NEAR(*simple.diagnostic("lambda_over_R"), 0.1 / 148.7, 1e-15);
  EXPECT_NEAR(*simple.diagnostic("expected_rel_deviation"), simple.value / exact - 1.0, 1e-12);
  EXPECT_NEAR(*simple.diagnostic("sphere_diameter_over_lambda"), 2974.0, 1e-9);
}

TEST(Yukawa, SimplifiedPfaWithinTwiceLambdaOverR) {
  for (double x : {1e-6, 1e-5, 1e-4, 1e-3}) {
    const Sphere s(1.0, 1.0);
    const Plate plate(1.0, Thickness::finite(50 * x));
    const YukawaParams p(1.0, x);
    const double ratio = yukawa_sphere_plate_force_pfa_simple(s, plate, Gap(x), p).value /
                         yukawa_sphere_plate_force_exact(s, plate, Gap(x), p);
    EXPECT_LE(std::abs(ratio - 1.0), 2 * x) << x;
  }
}

TEST(Yukawa, AlphaZeroIsExactlyZero) {
  const YukawaParams p(0.0, 1e-6);
  const Sphere s(1.0, 1e-4);
  const Plate plate(1.0, Thickness::infinite());
  EXPECT_EQ(yukawa_sphere_plate_force_exact(s, plate, Gap(1e-7), p), 0.0);
  EXPECT_EQ(yukawa_sphere_plate_force_pfa_general(s, plate, Gap(1e-7), p).value, 0.0);
  EXPECT_EQ(yukawa_sphere_plate_force_pfa_simple(s, plate, Gap(1e-7), p).value, 0.0);
  EXPECT_EQ(yukawa_plate_plate_pressure(plate, plate, Gap(1e-7), p), 0.0);
}

}  // namespace
}  // namespace proxforce
