#include <benchmark/benchmark.h>

#include "kummerlab/construction.hpp"
#include "kummerlab/fourier.hpp"
#include "kummerlab/kummer.hpp"
#include "kummerlab/local_set.hpp"

using namespace kummerlab;

static void BM_MultiplierSearch(benchmark::State& state) {
  const auto M = static_cast<std::uint64_t>(state.range(0));
  const ConstructionParams params = make_params(M, ExactRational(2), ExactRational(7, 10), BigInt(100000000));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_search(params, workers));
}
BENCHMARK(BM_MultiplierSearch)->Args({10, 1})->Args({20, 1})->Args({20, 8})->Args({40, 8})
    ->Unit(benchmark::kMillisecond);

static void BM_FExact(benchmark::State& state) {
  const BigInt n = apssv_seed(static_cast<std::uint64_t>(state.range(0))).to_integer() - 1;
  for (auto _ : state) benchmark::DoNotOptimize(f_exact(n, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_FExact)->Arg(10)->Arg(25)->Arg(60)->Unit(benchmark::kMicrosecond);

static void BM_FExactSmall(benchmark::State& state) {
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= 2000; ++n) benchmark::DoNotOptimize(f_exact(big_from_u64(n)));
  }
}
BENCHMARK(BM_FExactSmall)->Unit(benchmark::kMillisecond);

static void BM_LocalFourier(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto method = state.range(1) ? DftMethod::kFast : DftMethod::kDirect;
  const ConstructionParams params = make_params(p - 1, ExactRational(2), ExactRational(9, 10));
  const LocalSet A = LocalSet::build(p, params);
  for (auto _ : state) benchmark::DoNotOptimize(local_fourier(A, method));
  state.SetLabel("m=" + std::to_string(A.m));
}
BENCHMARK(BM_LocalFourier)->Args({23, 0})->Args({23, 1})->Args({101, 0})->Args({101, 1})->Args({211, 1})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
