#include <benchmark/benchmark.h>

#include "blowdown/sweep.hpp"

using namespace blowdown;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_hj_roundtrip(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hj_roundtrip_sweep(6, 9, exec_of(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * chain_box_size(6, 9)));
}
BENCHMARK(BM_hj_roundtrip)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_classify_vs_wahl(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_vs_wahl_sweep(5, 9, exec_of(state)));
}
BENCHMARK(BM_classify_vs_wahl)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_snf(benchmark::State& state) {
  const auto mats = random_matrices(200, 8, 20, 7);
  for (auto _ : state) benchmark::DoNotOptimize(snf_sweep(mats, exec_of(state)));
}
BENCHMARK(BM_snf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_coker_order(benchmark::State& state) {
  const auto chains = random_chains(500, 10, 12, 7);
  for (auto _ : state) benchmark::DoNotOptimize(coker_order_sweep(chains, exec_of(state)));
}
BENCHMARK(BM_coker_order)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_discrepancy(benchmark::State& state) {
  const auto chains = wahl_enumerate(9);
  for (auto _ : state) benchmark::DoNotOptimize(discrepancy_sweep(chains, exec_of(state)));
}
BENCHMARK(BM_discrepancy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
