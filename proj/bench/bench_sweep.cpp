#include <benchmark/benchmark.h>

#include "junior/sweep.hpp"

using namespace junior;

namespace {

void BM_MinimalitySerial(benchmark::State& state) {
  const Simplex s(normalize_action(state.range(0), 1, 2, state.range(0) - 3));
  for (auto _ : state) benchmark::DoNotOptimize(minimality_sweep(s));
}

void BM_MinimalityParallel(benchmark::State& state) {
  const Simplex s(normalize_action(state.range(0), 1, 2, state.range(0) - 3));
  for (auto _ : state) benchmark::DoNotOptimize(minimality_sweep_parallel(s));
}

void BM_VerifySerial(benchmark::State& state) {
  VerifyOptions opt;
  opt.rmax = state.range(0);
  opt.minimality_rmax = 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_serial(opt));
}

void BM_VerifyParallel(benchmark::State& state) {
  VerifyOptions opt;
  opt.rmax = state.range(0);
  opt.minimality_rmax = 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(opt));
}

void BM_GHilbert(benchmark::State& state) {
  const Simplex s(normalize_action(state.range(0), 1, 2, state.range(0) - 3));
  for (auto _ : state) benchmark::DoNotOptimize(ghilbert_triangulation(s));
}

void BM_Knockout(benchmark::State& state) {
  const Simplex s(normalize_action(state.range(0), 1, 2, state.range(0) - 3));
  for (auto _ : state) benchmark::DoNotOptimize(knockout_triangulation(s));
}

}  // namespace

BENCHMARK(BM_MinimalitySerial)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalityParallel)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(19)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(19)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GHilbert)->Arg(31)->Arg(47)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Knockout)->Arg(31)->Arg(47)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
