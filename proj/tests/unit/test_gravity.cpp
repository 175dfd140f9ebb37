#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "proxforce/errors.hpp"
#include "proxforce/gravity.hpp"

namespace proxforce {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Gravity, PointPlate) {
  const double f = grav_point_plate_force(PointMass(2.0, 5.0), Plate(3.0, Thickness::finite(0.5)));
  EXPECT_DOUBLE_EQ(f, -2 * kPi * kNewtonG * 2.0 * 3.0 * 0.5);
  EXPECT_THROW((void)grav_point_plate_force(PointMass(1.0, 1.0), Plate(1.0, Thickness::infinite())),
               DomainError);
}

TEST(Gravity, SpherePlateUnitValue) {
  const double f = grav_sphere_plate_force(Sphere(1.0, 1.0), Plate(1.0, Thickness::finite(1.0)));
  EXPECT_NEAR(f, -1.7566e-9, 1e-13);
  EXPECT_DOUBLE_EQ(f, -(8 * kPi * kPi / 3) * kNewtonG);
}

TEST(Gravity, SpherePlateIsSphereMassTimesPointForce) {
  const Sphere s(7.0, 0.3);
  const Plate p(2.0, Thickness::finite(0.2));
  const double via_point = grav_point_plate_force(PointMass(s.density() * s.volume(), 1.0), p);
  EXPECT_NEAR(grav_sphere_plate_force(s, p) / via_point, 1.0, 1e-15);
}

TEST(Gravity, PlatePlatePressureIndependentOfSeparation) {
  const Plate a(1.0, Thickness::finite(2.0));
  const Plate b(3.0, Thickness::finite(0.5));
  EXPECT_DOUBLE_EQ(grav_plate_plate_pressure(a, b), -2 * kPi * kNewtonG * 3.0);
  EXPECT_THROW((void)grav_plate_plate_pressure(a, Plate(1.0, Thickness::infinite())), DomainError);
}

TEST(Gravity, CustomConstant) {
  EXPECT_DOUBLE_EQ(
      grav_sphere_plate_force(Sphere(1.0, 1.0), Plate(1.0, Thickness::finite(1.0)), 1.0),
      -(8 * kPi * kPi / 3));
}

TEST(Gravity, ProfileIsNonDecaying) {
  const auto p = grav_plate_profile(Plate(2.0, Thickness::finite(1.0)), 3.0);
  EXPECT_EQ(p.decay, Decay::NonDecaying);
  EXPECT_DOUBLE_EQ(p.pressure(1e-9, 0.5), p.pressure(1e3, 0.5));
  EXPECT_EQ(p.pressure(1.0, 0.0), 0.0);
}

TEST(Gravity, SimplifiedPfaRejected) {
  try {
    (void)grav_sphere_plate_force_pfa_simple(Sphere(1.0, 1.0), Plate(1.0, Thickness::finite(1.0)),
                                             Gap(0.1));
    FAIL() << "simplified PFA must not return a value for gravity";
  } catch (const PreconditionViolation& e) {
    EXPECT_NE(std::string(e.what()).find("inapplicable"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace proxforce
