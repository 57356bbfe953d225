#include <benchmark/benchmark.h>

#include "ctxf/contextual_fraction.hpp"
#include "ctxf/entanglement.hpp"

namespace {

using namespace ctxf;

void BM_CfTable1c(benchmark::State& state) {
  auto e = fixture_model("table1c");
  for (auto _ : state) benchmark::DoNotOptimize(contextual_fraction(e).cf);
}
BENCHMARK(BM_CfTable1c);

void BM_CfGhz2(benchmark::State& state) {
  auto sc = shared_bell_scenario(basis_pi8(), basis_5pi8(), 2);
  auto e = born_model(ghz_state(2), sc);
  for (auto _ : state) benchmark::DoNotOptimize(contextual_fraction(e).cf);
}
BENCHMARK(BM_CfGhz2);

void BM_CfGhz3(benchmark::State& state) {
  auto sc = shared_bell_scenario(basis_x(), basis_y(), 3);
  auto e = born_model(ghz_state(3), sc);
  for (auto _ : state) benchmark::DoNotOptimize(contextual_fraction(e).cf);
}
BENCHMARK(BM_CfGhz3);

void BM_SchmidtDecompose(benchmark::State& state) {
  std::mt19937_64 rng(7);
  auto psi = random_pure_state(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(schmidt_decompose(psi).theta);
}
BENCHMARK(BM_SchmidtDecompose);

void BM_EquatorialSweep(benchmark::State& state) {
  auto ghz = ghz_state(2);
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equatorial_sweep(ghz, n).cf[0]);
}
BENCHMARK(BM_EquatorialSweep)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
