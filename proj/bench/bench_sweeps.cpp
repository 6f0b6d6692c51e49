// Parallel family sweeps against their serial references.

#include "hecke/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace hecke;

namespace {

const PrecisionContext kCtx{20, 6};

void BM_central_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sweep::central_values(st.range(0), kCtx));
}

void BM_central_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sweep::central_values_serial(st.range(0), kCtx));
}

void BM_zeros_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sweep::zeros(st.range(0), 5.0, kCtx));
}

void BM_zeros_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sweep::zeros_serial(st.range(0), 5.0, kCtx));
}

}  // namespace

BENCHMARK(BM_central_parallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_central_serial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zeros_parallel)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zeros_serial)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
