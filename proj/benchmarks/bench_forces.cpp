#include <benchmark/benchmark.h>

#include <cmath>

#include "proxforce/proxforce.hpp"

namespace {

using namespace proxforce;

void BM_YukawaExact(benchmark::State& state) {
  const Sphere s(19300, 148.7e-6);
  const Plate p(2330, Thickness::infinite());
  const YukawaParams y(1e10, 0.1e-6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(yukawa_sphere_plate_force_exact(s, p, Gap(0.2e-6), y));
  }
}
BENCHMARK(BM_YukawaExact);

// range(0): -log10(lambda / R)
void BM_YukawaPfaGeneral(benchmark::State& state) {
  const double r = 148.7e-6;
  const double lambda = r * std::pow(10.0, -static_cast<double>(state.range(0)));
  const Sphere s(19300, r);
  const Plate p(2330, Thickness::finite(3.5e-6));
  const YukawaParams y(1e10, lambda);
  double evals = 0;
  for (auto _ : state) {
    const auto f = yukawa_sphere_plate_force_pfa_general(s, p, Gap(2 * lambda), y);
    benchmark::DoNotOptimize(f.value);
    evals = *f.diagnostic("quadrature_evaluations");
  }
  state.counters["evaluations"] = evals;
}
BENCHMARK(BM_YukawaPfaGeneral)->DenseRange(0, 4);

void BM_GravityPfaGeneral(benchmark::State& state) {
  const Sphere s(19300, 1e-3);
  const Plate p(2330, Thickness::finite(1e-3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grav_sphere_plate_force_pfa(s, p).value);
  }
}
BENCHMARK(BM_GravityPfaGeneral);

void BM_LayeredForce(benchmark::State& state) {
  const LayeredBodyPair pair(
      LayerStack(2330, Thickness::finite(3.5e-6), {Layer(10e-9, 8900), Layer(150e-9, 19300)}),
      LayerStack::sphere(2200, 148.7e-6, {Layer(10e-9, 8900), Layer(200e-9, 19300)}), Gap(0.2e-6));
  const YukawaParams y(1e10, 0.1e-6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(yukawa_layered_sphere_plate_force(pair, y).value);
  }
}
BENCHMARK(BM_LayeredForce);

}  // namespace
