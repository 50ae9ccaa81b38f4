// Serial reference vs OpenMP kernels for word enumeration and batch verification.
#include <benchmark/benchmark.h>

#include "tsv/decomp.hpp"

namespace {

tsv::ComplexTorus e_i() { return tsv::ComplexTorus("E_i", tsv::ScalarMatrix{{0, -1}, {1, 0}}); }

void BM_EnumerateSerial(benchmark::State& state) {
  auto gens = tsv::sp_generators(e_i(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(tsv::enumerate_words(gens, state.range(0)));
}

void BM_EnumerateParallel(benchmark::State& state) {
  auto gens = tsv::sp_generators(e_i(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(tsv::enumerate_words_parallel(gens, state.range(0)));
}

void BM_VerifyBatch(benchmark::State& state, tsv::Execution execution) {
  const auto a = e_i();
  for (auto _ : state) benchmark::DoNotOptimize(tsv::verify_batch(a, a, state.range(0), 2, execution));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyBatch, serial, tsv::Execution::Serial)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyBatch, parallel, tsv::Execution::Parallel)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
