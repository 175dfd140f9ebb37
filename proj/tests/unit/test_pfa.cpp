#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "proxforce/errors.hpp"
#include "proxforce/gravity.hpp"
#include "proxforce/pfa.hpp"
#include "proxforce/yukawa.hpp"

namespace proxforce {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(PfaGeneral, ConstantPressureGivesProjectedArea) {
  const PressureProfile unit{[](double, double) { return 1.0; }, Decay::Decaying};
  const auto f = pfa_general(unit, AxisymmetricGap::sphere(2.0, 0.1));
  EXPECT_NEAR(f.value, kPi * 4.0, 1e-12);
  EXPECT_EQ(f.method, Method::PfaGeneral);
  EXPECT_TRUE(f.diagnostic("quadrature_evaluations").has_value());
}

TEST(PfaGeneral, LinearInThicknessGivesVolume) {
  const PressureProfile p{[](double, double d2) { return d2; }, Decay::NonDecaying};
  const auto f = pfa_general(p, AxisymmetricGap::sphere(1.5, 1e-3));
  EXPECT_NEAR(f.value / (4.0 / 3.0 * kPi * 1.5 * 1.5 * 1.5), 1.0, 1e-12);
}

TEST(PfaSimple, RejectsNonDecayingWithoutEvaluating) {
  bool called = false;
  auto energy = [&](double) {
    called = true;
    return 1.0;
  };
  EXPECT_THROW((void)pfa_simple(energy, CurvatureData(1.0, 1.0), 0.1, Decay::NonDecaying),
               PreconditionViolation);
  EXPECT_FALSE(called);
}

TEST(PfaSimple, UsesMeanRadius) {
  const auto f = pfa_simple([](double a) { return a * 3.0; }, CurvatureData(1.0, 4.0), 0.5,
                            Decay::Decaying);
  EXPECT_DOUBLE_EQ(f.value, 2.0 * kPi * 2.0 * 1.5);
  EXPECT_EQ(f.method, Method::PfaSimple);
  EXPECT_THROW(CurvatureData(0.0, 1.0), DomainError);
}

class GravityPfaIdentity : public ::testing::TestWithParam<double> {};

TEST_P(GravityPfaIdentity, GeneralPfaEqualsExact) {
  const double r = GetParam();
  const Sphere sphere(19300.0, r);
  const Plate plate(2330.0, Thickness::finite(0.7 * r));
  QuadratureConfig q;
  q.rel_tol = 1e-12;
  const auto pfa = grav_sphere_plate_force_pfa(sphere, plate, q);
  EXPECT_NEAR(pfa.value / grav_sphere_plate_force(sphere, plate), 1.0, 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Radii, GravityPfaIdentity, ::testing::Values(1e-6, 1e-3, 0.1, 1.0));

struct YukawaCase {
  double lambda_over_r;
  double a_over_lambda;
  bool infinite;
};

class YukawaPfaIdentity : public ::testing::TestWithParam<YukawaCase> {};

TEST_P(YukawaPfaIdentity, GeneralPfaEqualsExact) {
  const auto c = GetParam();
  const double r = 150e-6;
  const double lambda = c.lambda_over_r * r;
  const Sphere sphere(8900.0, r);
  const Plate plate(2200.0, c.infinite ? Thickness::infinite() : Thickness::finite(2 * lambda));
  const Gap gap(c.a_over_lambda * lambda);
  const YukawaParams p(1e5, lambda);
  QuadratureConfig q;
  q.rel_tol = 1e-12;
  const auto pfa = yukawa_sphere_plate_force_pfa_general(sphere, plate, gap, p, q);
  const double exact = yukawa_sphere_plate_force_exact(sphere, plate, gap, p);
  EXPECT_NEAR(pfa.value / exact, 1.0, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Ranges, YukawaPfaIdentity,
                         ::testing::Values(YukawaCase{1e-4, 1.0, true}, YukawaCase{1e-3, 1e-3, false},
                                           YukawaCase{0.1, 2.0, true}, YukawaCase{1.0, 0.5, false},
                                           YukawaCase{10.0, 0.1, true},
                                           YukawaCase{100.0, 3.0, false}));

}  // namespace
}  // namespace proxforce
