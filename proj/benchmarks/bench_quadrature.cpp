#include <benchmark/benchmark.h>

#include <cmath>

#include "proxforce/quadrature.hpp"

namespace {

void BM_IntegrateSmooth(benchmark::State& state) {
  proxforce::QuadratureConfig cfg;
  cfg.rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  long evals = 0;
  for (auto _ : state) {
    const auto r = proxforce::integrate([](double x) { return std::exp(-x) * std::cos(3 * x); }, 0.0, 10.0, cfg);
    benchmark::DoNotOptimize(r.value);
    evals = r.evaluations;
  }
  state.counters["evaluations"] = static_cast<double>(evals);
}
BENCHMARK(BM_IntegrateSmooth)->Arg(6)->Arg(10)->Arg(13);

void BM_IntegrateRadialRim(benchmark::State& state) {
  for (auto _ : state) {
    const auto r = proxforce::integrate_radial([](double r) { return r * std::sqrt(1 - r * r); }, 1.0);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_IntegrateRadialRim);

void BM_IntegrateToInfinity(benchmark::State& state) {
  for (auto _ : state) {
    const auto r = proxforce::integrate_to_infinity([](double x) { return std::exp(-x) / (1 + x); }, 0.0, 1.0);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_IntegrateToInfinity);

}  // namespace
