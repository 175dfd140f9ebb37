#include <benchmark/benchmark.h>

#include "proxforce/proxforce.hpp"

namespace {

using namespace proxforce;

void BM_McGravity(benchmark::State& state) {
  const auto slab = SolidBody::slab(1.0, Thickness::finite(1.0), 0.0, 10.0);
  const auto ball = SolidBody::ball(1.0, 1.0, 1.5);
  const McConfig cfg{static_cast<std::uint64_t>(state.range(0)), 1, false,
                     static_cast<unsigned>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_mc_force(slab, ball, PairKernel::gravity(), cfg).value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McGravity)->Args({100000, 1})->Args({100000, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_McYukawaStratified(benchmark::State& state) {
  const auto slab = SolidBody::slab(1.0, Thickness::infinite(), 0.0, 5.0);
  const auto ball = SolidBody::ball(1.0, 1.0, 1.2);
  const McConfig cfg{100000, 1, state.range(0) != 0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle_mc_force(slab, ball, PairKernel::yukawa(YukawaParams(1.0, 1.0)), cfg).value);
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_McYukawaStratified)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_QuadOracleBall(benchmark::State& state) {
  const auto slab = SolidBody::slab(1.0, Thickness::finite(1.0), 0.0);
  const auto ball = SolidBody::ball(1.0, 1.0, 1.5);
  const auto kernel = PairKernel::yukawa(YukawaParams(1.0, 0.3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_quad_force(slab, ball, kernel).value);
  }
}
BENCHMARK(BM_QuadOracleBall);

}  // namespace
