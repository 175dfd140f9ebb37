// Regression values recorded from a verified build. The closed forms are
// compared tightly; Monte Carlo values pin the sampling scheme and stream
// layout, so any change to either shows up here.

#include <gtest/gtest.h>

#include "proxforce/proxforce.hpp"

namespace proxforce {
namespace {

TEST(Frozen, ClosedForms) {
  EXPECT_NEAR(grav_sphere_plate_force(Sphere(1.0, 1.0), Plate(1.0, Thickness::finite(1.0))) / -1.7566053507784187e-09, 1.0, 1e-14);
  const Sphere s(1.0, 148.7e-6);
  const Plate p(1.0, Thickness::infinite());
  const YukawaParams y(1.0, 0.1e-6);
  EXPECT_NEAR(yukawa_sphere_plate_force_exact(s, p, Gap(0.2e-6), y) / -5.2990169169939648e-35, 1.0, 1e-13);
  EXPECT_NEAR(yukawa_sphere_plate_force_pfa_simple(s, p, Gap(0.2e-6), y).value / -5.3025828772342034e-35, 1.0, 1e-13);
  EXPECT_NEAR(sphere_finite_size_factor(1.0) / 0.2706705664732254, 1.0, 1e-14);
  EXPECT_NEAR(sphere_finite_size_factor(50.0) / 0.00026139676848368137, 1.0, 1e-13);
}

TEST(Frozen, MonteCarlo) {
  const auto g = oracle_mc_force(SolidBody::slab(1.0, Thickness::finite(1.0), 0.0, 10.0),
                                 SolidBody::ball(1.0, 1.0, 1.1), PairKernel::gravity(),
                                 McConfig{100000, 7, false, 1});
  EXPECT_NEAR(g.value / -1.7625183688619544e-09, 1.0, 1e-12);
  EXPECT_NEAR(g.error_estimate / 1.687026152775353e-11, 1.0, 1e-10);
  const auto y = oracle_mc_force(SolidBody::slab(1.0, Thickness::infinite(), 0.0),
                                 SolidBody::ball(1.0, 1.0, 1.2), PairKernel::yukawa(YukawaParams(1.0, 0.5)),
                                 McConfig{100000, 7, true, 1});
  EXPECT_NEAR(y.value / -7.6714248532984052e-11, 1.0, 1e-12);
  EXPECT_NEAR(y.error_estimate / 1.5854071022157781e-11, 1.0, 1e-10);
}

}  // namespace
}  // namespace proxforce
