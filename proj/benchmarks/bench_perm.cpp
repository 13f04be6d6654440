#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "resproc/perm_sort.hpp"

namespace {

using namespace resproc;

void BM_AvgFree(benchmark::State& state) {
  const auto method = state.range(1) ? perm::AvgFreeMethod::kMemoized : perm::AvgFreeMethod::kPowerOfTwo;
  for (auto _ : state) benchmark::DoNotOptimize(perm::avg_free_permutation(static_cast<int>(state.range(0)), method));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AvgFree)->ArgsProduct({{1 << 14, 1 << 20}, {0, 1}});

void BM_Inversions(benchmark::State& state) {
  testing::Gen g(7);
  const auto r = g.permutation(1 << 16);
  const auto method = static_cast<perm::InversionMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(perm::count_inversions(r, method));
}
BENCHMARK(BM_Inversions)->DenseRange(0, 2);

void BM_RotationSort(benchmark::State& state) {
  testing::Gen g(8);
  const perm::Permutation p(g.permutation(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(perm::sort_by_rotations_v1(p, 1));
    benchmark::DoNotOptimize(perm::sort_by_rotations_v2(p));
  }
}
BENCHMARK(BM_RotationSort)->Arg(256)->Arg(2048);

void BM_Grouping(benchmark::State& state) {
  testing::Gen g(9);
  const perm::MultiPermutation p(g.multiperm(10'000, static_cast<int>(state.range(0))));
  const auto method = state.range(1) ? perm::GroupingMethod::kBitmask : perm::GroupingMethod::kSjt;
  for (auto _ : state) benchmark::DoNotOptimize(perm::group_identical_min_swaps(p, method));
}
BENCHMARK(BM_Grouping)->ArgsProduct({{6, 8, 10}, {0, 1}});

void BM_MoveSort(benchmark::State& state) {
  testing::Gen g(10);
  const perm::Permutation p(g.permutation(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(perm::move_sort_min_cost(p));
}
BENCHMARK(BM_MoveSort)->Arg(256)->Arg(2048);

void BM_CircularSort(benchmark::State& state) {
  testing::Gen g(11);
  const perm::MultiPermutation p(g.multiperm(static_cast<int>(state.range(0)), 20));
  for (auto _ : state) benchmark::DoNotOptimize(perm::circular_multiperm_sort(p));
}
BENCHMARK(BM_CircularSort)->Arg(256)->Arg(2048);

}  // namespace
