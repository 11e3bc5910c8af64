#include <benchmark/benchmark.h>

#include <random>

#include "mstep/bool_matrix.hpp"
#include "mstep/generator.hpp"
#include "mstep/limit.hpp"
#include "mstep/oracle.hpp"

namespace {

mstep::BoolMatrix random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  mstep::BoolMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) a.set(i, j);
  return a;
}

void BM_BoolMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 0.5, 1);
  const auto b = random_matrix(n, 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bool_mul(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BoolMul)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

void BM_Gamma(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 0.05, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gamma(a));
}
BENCHMARK(BM_Gamma)->RangeMultiplier(4)->Range(64, 1024);

void BM_PowerCycleOfCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  mstep::BoolMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, (i + 1) % n);
  for (auto _ : state) benchmark::DoNotOptimize(power_cycle(a));
}
BENCHMARK(BM_PowerCycleOfCycle)->RangeMultiplier(2)->Range(16, 256);

void BM_SimulateVsAnalytic(benchmark::State& state) {
  mstep::InstanceSpec spec;
  spec.eta = 4;
  spec.max_size = 5;
  spec.seed = 11;
  const auto d = mstep::random_instance(spec);
  const bool simulate = state.range(0) != 0;
  for (auto _ : state) {
    if (simulate)
      benchmark::DoNotOptimize(mstep::simulate_limit(to_matrix(d)));
    else
      benchmark::DoNotOptimize(mstep::limit_graph(d));
  }
  state.SetLabel(simulate ? "simulated" : "analytic");
}
BENCHMARK(BM_SimulateVsAnalytic)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
