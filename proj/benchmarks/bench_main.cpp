#include <benchmark/benchmark.h>

#include <random>

#include "supertri/fixtures.hpp"
#include "supertri/operator_spaces.hpp"

using namespace supertri;

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> dist(-5, 5);
  Matrix m(n, n + 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_DerivationSpace(benchmark::State& state) {
  const auto spec = builtin("dsum-zero2-idem1");
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space(spec, {1, 1}, state.range(0) != 0));
}
BENCHMARK(BM_DerivationSpace)->Arg(0)->Arg(1);

static void BM_Battery(benchmark::State& state) {
  const auto spec = builtin("dsum-zero2-idem1");
  for (auto _ : state) benchmark::DoNotOptimize(proposition_battery(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Battery)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
