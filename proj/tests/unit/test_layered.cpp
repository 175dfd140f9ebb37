#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "proxforce/errors.hpp"
#include "proxforce/yukawa.hpp"

namespace proxforce {
namespace {

LayeredBodyPair ref21(double rho1, double rho1p, double rho1pp, double rho2, double rho2p,
                      double rho2pp, double a = 0.2e-6) {
  return LayeredBodyPair(
      LayerStack(rho1, Thickness::finite(3.5e-6), {Layer(10e-9, rho1p), Layer(150e-9, rho1pp)}),
      LayerStack::sphere(rho2, 148.7e-6, {Layer(10e-9, rho2p), Layer(200e-9, rho2pp)}), Gap(a));
}

TEST(Layered, PlateBracketByHand) {
  const double l = 0.1e-6;
  const LayerStack s(2.0, Thickness::infinite(), {Layer(10e-9, 3.0), Layer(150e-9, 5.0)});
  const double expected = 5.0 - (5.0 - 3.0) * std::exp(-150e-9 / l) - (3.0 - 2.0) * std::exp(-160e-9 / l);
  EXPECT_NEAR(layer_bracket(s, l), expected, 1e-15);
}

TEST(Layered, SphereBracketByHand) {
  const double l = 0.1e-6, r = 1e-4;
  const auto s = LayerStack::sphere(2.0, r, {Layer(10e-9, 3.0), Layer(200e-9, 5.0)});
  const double expected = r * 5.0 - (r - 200e-9) * 2.0 * std::exp(-2.0) -
                          (r - 210e-9) * 1.0 * std::exp(-2.1);
  EXPECT_NEAR(sphere_layer_bracket(s, l) / expected, 1.0, 1e-14);
}

TEST(Layered, BareBodiesReduceToHomogeneous) {
  const LayerStack s(4.0, Thickness::infinite());
  EXPECT_EQ(layer_bracket(s, 1.0), 4.0);
}

TEST(Layered, EqualDensitiesReproduceHomogeneousFormulas) {
  const YukawaParams p(1e3, 0.1e-6);
  const auto pair = ref21(2.5, 2.5, 2.5, 7.0, 7.0, 7.0);
  const Plate lower(2.5, Thickness::infinite());
  const Plate upper(7.0, Thickness::infinite());
  EXPECT_NEAR(yukawa_layered_plate_energy(pair, p).value /
                  yukawa_plate_plate_energy(lower, upper, pair.gap(), p),
              1.0, 1e-12);
  EXPECT_NEAR(yukawa_layered_sphere_plate_force(pair, p).value /
                  yukawa_sphere_plate_force_pfa_simple(Sphere(7.0, 148.7e-6), lower, pair.gap(), p).value,
              1.0, 1e-12);
}

TEST(Layered, MappingErrorAgreesWithDirectDifference) {
  const YukawaParams p(1.0, 0.1e-6);
  const auto pair = ref21(2330, 8900, 19300, 2200, 8900, 19300);
  const double f = yukawa_layered_sphere_plate_force(pair, p).value;
  const double e = yukawa_layered_plate_energy(pair, p).value;
  const double direct = std::abs(f - 2 * std::numbers::pi * pair.radius() * e) / std::abs(f);
  const auto m = yukawa_mapping_error(pair, p);
  EXPECT_NEAR(m.rel_mapping_error, direct, 1e-9);
  EXPECT_NEAR(m.ratio_2, 210e-9 / 148.7e-6, 1e-18);
  EXPECT_NEAR(m.ratio_1, 200e-9 / 148.7e-6, 1e-18);
  EXPECT_LE(m.rel_mapping_error, m.ratio_2);
}

TEST(Layered, ForceDiagnostics) {
  const YukawaParams p(1.0, 0.1e-6);
  const auto f = yukawa_layered_sphere_plate_force(ref21(1, 2, 3, 4, 5, 6), p);
  EXPECT_TRUE(f.diagnostic("rel_mapping_error"));
  EXPECT_NEAR(*f.diagnostic("plate_substrate_exp"), std::exp(-35.0), 1e-25);
  EXPECT_NEAR(*f.diagnostic("lambda_over_D1"), 0.1 / 3.5, 1e-15);
}

TEST(Layered, CoatingMustFitInSphere) {
  EXPECT_THROW(LayeredBodyPair(LayerStack(1.0, Thickness::infinite()),
                               LayerStack(1.0, Thickness::infinite()), Gap(1e-7)),
               DomainError);
}

TEST(Layered, AlphaZero) {
  const YukawaParams p(0.0, 0.1e-6);
  const auto pair = ref21(1, 2, 3, 4, 5, 6);
  EXPECT_EQ(yukawa_layered_plate_energy(pair, p).value, 0.0);
  EXPECT_EQ(yukawa_layered_sphere_plate_force(pair, p).value, 0.0);
}

}  // namespace
}  // namespace proxforce
