#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "proxforce/errors.hpp"
#include "proxforce/geometry.hpp"

namespace proxforce {
namespace {

TEST(Thickness, FiniteAndInfiniteAreDistinct) {
  const auto d = Thickness::finite(2.0);
  EXPECT_FALSE(d.is_infinite());
  EXPECT_EQ(d.metres(), 2.0);
  const auto inf = Thickness::infinite();
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_THROW((void)inf.metres(), DomainError);
  EXPECT_NE(d, inf);
}

TEST(Thickness, RejectsNonPositiveAndNonFinite) {
  EXPECT_THROW(Thickness::finite(0.0), DomainError);
  EXPECT_THROW(Thickness::finite(-1.0), DomainError);
  EXPECT_THROW(Thickness::finite(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(Thickness::finite(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(Thickness, ScreeningFactor) {
  EXPECT_EQ(Thickness::infinite().screening_factor(1.0), 1.0);
  EXPECT_NEAR(Thickness::finite(1.0).screening_factor(1.0), 1.0 - std::exp(-1.0), 1e-16);
  // Thin slab: 1 - e^{-x} ~ x without cancellation.
  EXPECT_NEAR(Thickness::finite(1e-12).screening_factor(1.0) / 1e-12, 1.0, 1e-12);
  EXPECT_EQ(Thickness::finite(1e4).screening_factor(1.0), 1.0);
}

TEST(ExpNeg, UnderflowsToZero) {
  EXPECT_EQ(exp_neg(746.0), 0.0);
  EXPECT_EQ(exp_neg(1e300), 0.0);
  EXPECT_DOUBLE_EQ(exp_neg(1.0), std::exp(-1.0));
}

TEST(Bodies, Validation) {
  EXPECT_THROW(Sphere(1.0, 0.0), DomainError);
  EXPECT_THROW(Sphere(-1.0, 1.0), DomainError);
  EXPECT_THROW(Gap(-1e-9), DomainError);
  EXPECT_THROW(Gap(0.0), DomainError);
  EXPECT_NO_THROW(Gap(1e-12));
  EXPECT_THROW(YukawaParams(1.0, 0.0), DomainError);
  EXPECT_NO_THROW(YukawaParams(-3.0, 1.0));
  EXPECT_THROW(Layer(0.0, 1.0), DomainError);
  EXPECT_DOUBLE_EQ(Sphere(1.0, 2.0).volume(), 4.0 / 3.0 * M_PI * 8.0);
}

TEST(LayerStack, SurfaceDensityAndTotals) {
  const LayerStack s(1.0, Thickness::infinite(), {Layer(1e-9, 2.0), Layer(2e-9, 3.0)});
  EXPECT_EQ(s.surface_density(), 3.0);
  EXPECT_DOUBLE_EQ(s.total_layer_thickness(), 3e-9);
  const LayerStack bare(5.0, Thickness::finite(1.0));
  EXPECT_EQ(bare.surface_density(), 5.0);
  EXPECT_THROW(LayerStack::sphere(1.0, 1e-6, {Layer(2e-6, 1.0)}), DomainError);
}

TEST(SphereGap, MatchesDefinitionAndIsStableNearAxis) {
  const double r = 0.3, radius = 1.0, a = 0.01;
  EXPECT_NEAR(sphere_gap(r, radius, a), a + radius - std::sqrt(radius * radius - r * r), 1e-15);
  // r << R: the naive form loses all digits, the stable one keeps r^2/2R.
  EXPECT_NEAR((sphere_gap(1e-9, 1.0, 1e-30) - 1e-30) / 5e-19, 1.0, 1e-12);
  EXPECT_EQ(sphere_gap(1.0, 1.0, 0.5), 1.5);
  EXPECT_EQ(sphere_chord(1.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(sphere_chord(0.0, 2.0), 4.0);
  EXPECT_NEAR(sphere_chord(0.6, 1.0), 1.6, 1e-15);
  EXPECT_THROW((void)sphere_gap(1.1, 1.0, 0.0), DomainError);
  EXPECT_THROW((void)sphere_chord(-0.1, 1.0), DomainError);
}

TEST(SphereGap, GapPlusChordIdentityAndMonotonicity) {
  const double radius = 2.0, a = 0.3;
  double prev_gap = 0.0, prev_chord = 1e9;
  for (double r = 0.01; r < radius; r += 0.01) {
    const double g = sphere_gap(r, radius, a);
    const double c = sphere_chord(r, radius);
    EXPECT_NEAR(g + c, a + radius + std::sqrt(radius * radius - r * r), 1e-14);
    EXPECT_GT(g, prev_gap);
    EXPECT_LT(c, prev_chord);
    prev_gap = g;
    prev_chord = c;
  }
}

}  // namespace
}  // namespace proxforce
