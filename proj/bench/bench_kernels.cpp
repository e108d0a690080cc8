#include "cmm/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace cmm;

namespace {

WeightPoly operand(int n, int k) {
  const RootSystem rs(n);
  return delta_k(rs, k) * delta_k(rs, k).bar();
}

void BM_MulSerial(benchmark::State& state) {
  const WeightPoly f = operand(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(wp_mul(f, f));
}

void BM_MulParallel(benchmark::State& state) {
  const WeightPoly f = operand(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(wp_mul_parallel(f, f));
}

const std::vector<CmmInstance>& small_grid() {
  static const auto grid = grid_instances({{2, {1, 2}, 2}, {3, {1}, 1}});
  return grid;
}

VerificationReport check(const CmmInstance& inst) { return verify_cmm(inst); }

void BM_GridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_grid_serial(small_grid(), IdentityId::kEq1, check));
}

void BM_GridParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_grid_parallel(small_grid(), IdentityId::kEq1, check, threads));
}

}  // namespace

BENCHMARK(BM_MulSerial)->Args({2, 3})->Args({3, 2})->Args({4, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Args({2, 3})->Args({3, 2})->Args({4, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
