#include <benchmark/benchmark.h>

#include "selfref/lawvere_kernels.hpp"
#include "selfref/smullyan.hpp"

namespace {

const std::vector<std::size_t> kTriNegation = {1, 0, 2};

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(selfref::lawvere::sweep_serial(static_cast<std::size_t>(state.range(0)), kTriNegation));
  }
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(selfref::lawvere::sweep_parallel(static_cast<std::size_t>(state.range(0)), kTriNegation));
  }
}

void BM_SampleSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(selfref::smullyan::sample_models_serial(static_cast<std::uint64_t>(state.range(0)), 1));
  }
}

void BM_SampleParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(selfref::smullyan::sample_models_parallel(static_cast<std::uint64_t>(state.range(0)), 1));
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
