#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "resproc/split_find.hpp"

namespace {

using namespace resproc;

std::vector<sets::Value> weights(testing::Gen& g, int n) {
  std::vector<sets::Value> w(n);
  for (auto& x : w) x = g.between(-1000, 1000);
  return w;
}

void BM_OnlineDsu(benchmark::State& state) {
  testing::Gen g(12);
  const int n = static_cast<int>(state.range(0));
  const auto w = weights(g, n);
  const auto ops = testing::random_set_ops(g, n, n);
  const auto variant = state.range(1) ? sets::DsuVariant::kCommutative : sets::DsuVariant::kInvertible;
  for (auto _ : state) benchmark::DoNotOptimize(sets::run_online(w, sets::sum_aggregation(), variant, ops));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_OnlineDsu)->ArgsProduct({{1 << 14, 1 << 20}, {0, 1}});

void BM_OfflineDsu(benchmark::State& state) {
  testing::Gen g(13);
  const int n = static_cast<int>(state.range(0));
  const auto w = weights(g, n);
  const auto ops = testing::random_set_ops(g, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(sets::solve_offline(w, sets::max_aggregation(), ops));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_OfflineDsu)->Arg(1 << 14)->Arg(1 << 20);

void BM_SplitFind(benchmark::State& state) {
  const int n = 1 << 16;
  for (auto _ : state) {
    state.PauseTiming();
    testing::Gen g(14);
    sets::SplitFind sf(n, 0);
    std::vector<int> stack;
    state.ResumeTiming();
    for (int step = 0; step < state.range(0); ++step) {
      int i = g.in(1, n);
      while (!sf.starts_interval(i)) --i;
      if (!stack.empty() && g.chance(40)) {
        sf.undo(stack.back());
        stack.pop_back();
      } else if (sf.interval_end(i) > i) {
        const int k = g.in(i, sf.interval_end(i) - 1);
        sf.split(i, k, 1, 2);
        stack.push_back(k);
      } else {
        benchmark::DoNotOptimize(sf.query(i));
      }
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SplitFind)->Arg(1 << 16)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
