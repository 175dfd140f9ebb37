#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "proxforce/errors.hpp"
#include "proxforce/quadrature.hpp"

namespace proxforce {
namespace {

TEST(Quadrature, Polynomial) {
  const auto r = integrate([](double x) { return x * x * x - 2 * x + 1; }, -1.0, 2.0);
  EXPECT_NEAR(r.value, 15.0 / 4.0 - 3.0 + 3.0, 1e-14);
  EXPECT_EQ(r.evaluations, 21);
}

TEST(Quadrature, OscillatoryAndPeaked) {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-12;
  const auto r = integrate([](double x) { return std::sin(50 * x); }, 0.0, std::numbers::pi, cfg);
  EXPECT_NEAR(r.value, 0.0, 1e-12);
  const auto peak = integrate([](double x) { return 1.0 / (1e-6 + x * x); }, -1.0, 1.0);
  EXPECT_NEAR(peak.value / (2e3 * std::atan(1e3)), 1.0, 1e-10);
}

TEST(Quadrature, EndpointSingularity) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-8;
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg);
  EXPECT_NEAR(r.value, 2.0, 1e-9);
}

TEST(Quadrature, RadialRemovesRimSingularity) {
  // Area of the unit disc via 2 pi r dr and volume of the unit ball.
  const auto area = integrate_radial([](double r) { return 2 * std::numbers::pi * r; }, 1.0);
  EXPECT_NEAR(area.value, std::numbers::pi, 1e-14);
  const auto vol = integrate_radial(
      [](double r) { return 2 * std::numbers::pi * r * 2 * std::sqrt(1 - r * r); }, 1.0);
  EXPECT_NEAR(vol.value, 4.0 / 3.0 * std::numbers::pi, 1e-13);
}

TEST(Quadrature, ToInfinity) {
  const auto r = integrate_to_infinity([](double x) { return std::exp(-x / 3.0); }, 1.0, 3.0);
  EXPECT_NEAR(r.value, 3.0 * std::exp(-1.0 / 3.0), 1e-13);
  const auto g = integrate_to_infinity([](double x) { return 1.0 / (x * x); }, 2.0, 2.0);
  EXPECT_NEAR(g.value, 0.5, 1e-12);
}

TEST(Quadrature, NonFiniteIntegrandReportsAbscissa) {
  try {
    (void)integrate([](double x) { return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0; },
                    0.0, 1.0);
    FAIL() << "expected NonFiniteIntegrand";
  } catch (const NonFiniteIntegrand& e) {
    EXPECT_GT(e.where(), 0.5);
  }
}

TEST(Quadrature, NonConvergenceCarriesBestEstimate) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-14;
  cfg.max_intervals = 3;
  try {
    (void)integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, cfg);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_TRUE(std::isfinite(e.best_estimate()));
    EXPECT_GT(e.achieved_error(), 0.0);
  }
}

TEST(Quadrature, ConfigValidation) {
  QuadratureConfig cfg;
  cfg.rel_tol = 0.0;
  EXPECT_THROW(cfg.validate(), DomainError);
  EXPECT_THROW((void)integrate([](double) { return 1.0; }, 0.0, 1.0, cfg), DomainError);
}

TEST(Quadrature, ZeroIntegrand) {
  const auto r = integrate([](double) { return 0.0; }, 0.0, 1.0);
  EXPECT_EQ(r.value, 0.0);
}

}  // namespace
}  // namespace proxforce
