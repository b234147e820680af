// Serial reference vs OpenMP kernels.

#include "sfs/complexity.hpp"
#include "sfs/folding.hpp"
#include "sfs/wnum.hpp"

#include <benchmark/benchmark.h>

using namespace sfs;

static void BM_FactorCountsSerial(benchmark::State &state) {
    const Word t = folding::tau_stream(3).prefix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(complexity::factor_counts_serial(t.view(), 64));
}
BENCHMARK(BM_FactorCountsSerial)->Arg(1 << 14)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

static void BM_FactorCountsParallel(benchmark::State &state) {
    const Word t = folding::tau_stream(3).prefix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(complexity::factor_counts(t.view(), 64, 3));
}
BENCHMARK(BM_FactorCountsParallel)->Arg(1 << 14)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSerial(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(wnum::enumerate_valid_serial(3, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EnumerateSerial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_EnumerateParallel(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(wnum::enumerate_valid(3, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_EnumerateParallel)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_KernelEvidenceSerial(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(wnum::kernel_evidence_serial(2, 3, 5000));
}
BENCHMARK(BM_KernelEvidenceSerial)->Unit(benchmark::kMillisecond);

static void BM_KernelEvidenceParallel(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(wnum::kernel_evidence(2, 3, 5000));
}
BENCHMARK(BM_KernelEvidenceParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
