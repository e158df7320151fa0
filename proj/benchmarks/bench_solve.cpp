#include <benchmark/benchmark.h>

#include "torusdom/constructions.hpp"
#include "torusdom/solve.hpp"
#include "torusdom/validate.hpp"

using namespace torusdom;

namespace {

void BM_OracleTotal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_oracle(n, 4, DominationKind::Total).value);
}
BENCHMARK(BM_OracleTotal)->Arg(3)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_OraclePaired(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_oracle(n, 4, DominationKind::Paired).value);
}
BENCHMARK(BM_OraclePaired)->Arg(3)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

// Height (min side) drives the DP state count; rows run along the other side.
void BM_ProfileTotal(benchmark::State& state) {
  const int height = static_cast<int>(state.range(0));
  SolveOptions options;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_profile_dp(12, height, DominationKind::Total, options).value);
}
BENCHMARK(BM_ProfileTotal)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_ProfilePlain(benchmark::State& state) {
  const int height = static_cast<int>(state.range(0));
  SolveOptions options;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_profile_dp(12, height, DominationKind::Plain, options).value);
}
BENCHMARK(BM_ProfilePlain)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_ProfilePaired(benchmark::State& state) {
  const int height = static_cast<int>(state.range(0));
  SolveOptions options;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_paired(12, height, options).value);
}
BENCHMARK(BM_ProfilePaired)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ProfileWorkers(benchmark::State& state) {
  SolveOptions options;
  options.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_profile_dp(10, 7, DominationKind::Total, options).value);
}
BENCHMARK(BM_ProfileWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ValidatePaired(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const TorusGraph g = make_torus({side, side});
  const VertexSet d = construct_mod4(side, side).set;
  for (auto _ : state) benchmark::DoNotOptimize(is_paired_dominating(g, d));
  state.SetItemsProcessed(state.iterations() * g.order());
}
BENCHMARK(BM_ValidatePaired)->Arg(8)->Arg(32)->Arg(128);

void BM_ValidateTotal(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const TorusGraph g = make_torus({side, side});
  const VertexSet d = construct_mod4(side, side).set;
  for (auto _ : state) benchmark::DoNotOptimize(is_total_dominating(g, d));
  state.SetItemsProcessed(state.iterations() * g.order());
}
BENCHMARK(BM_ValidateTotal)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
