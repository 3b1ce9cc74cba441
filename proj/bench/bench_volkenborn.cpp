#include "qzeta/volkenborn_kernels.hpp"

#include <benchmark/benchmark.h>

namespace {

qzeta::MomentJob job(int level) {
    qzeta::MomentJob j;
    j.p = 5;
    j.work_precision = 30;
    j.base = 6;
    j.count = 1;
    for (int k = 0; k < level; ++k)
        j.count *= 5;
    j.max_moment = 6;
    return j;
}

void BM_MomentsSerial(benchmark::State& state) {
    const auto j = job(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qzeta::moment_sums_serial(j));
    state.SetItemsProcessed(state.iterations() * j.count);
}

void BM_MomentsParallel(benchmark::State& state) {
    const auto j = job(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qzeta::moment_sums_parallel(j));
    state.SetItemsProcessed(state.iterations() * j.count);
}

} // namespace

BENCHMARK(BM_MomentsSerial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MomentsParallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
