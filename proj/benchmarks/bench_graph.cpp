#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "resproc/ratio_opt.hpp"
#include "resproc/spanning_offers.hpp"
#include "resproc/toggle.hpp"
#include "resproc/transfer_routing.hpp"

namespace {

using namespace resproc;

void BM_Transfer(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = std::max(2, m / 10);
  testing::Gen g(1);
  std::vector<transfer::TimedEdge> edges;
  for (int i = 0; i < m; ++i) {
    transfer::TimedEdge e;
    e.from = g.in(1, n);
    e.to = g.other_than(e.from, n);
    e.tstart = g.between(0, 999'000);
    e.tfinish = e.tstart + g.between(1, 1000);
    e.twait = g.between(0, e.tfinish - e.tstart);
    edges.push_back(e);
  }
  for (auto _ : state) {
    const auto graph = transfer::build_schedule(n, edges);
    benchmark::DoNotOptimize(transfer::min_wait_transfer(graph, 1, n, 1'000'000));
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_Transfer)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Complexity(benchmark::oNLogN);

void BM_OfferMst(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  testing::Gen g(2);
  mst::OfferGraph graph;
  graph.n = 1000;
  graph.owners = q;
  for (int i = 2; i <= graph.n; ++i) graph.edges.push_back({g.in(1, i - 1), i, g.in(1, q), 1000, 1000});
  while (graph.edges.size() < 10'000) {
    const int a = g.in(1, graph.n);
    const Cost np = g.in(1, 1000);
    graph.edges.push_back({a, g.other_than(a, graph.n), g.in(1, q), np, g.in(0, static_cast<int>(np))});
  }
  for (auto _ : state) benchmark::DoNotOptimize(mst::best_offer_mst(graph));
}
BENCHMARK(BM_OfferMst)->Arg(1)->Arg(10)->Arg(100);

void BM_BoundedPath(benchmark::State& state) {
  testing::Gen g(3);
  ratio::LengthBoundedInstance inst;
  inst.n = 200;
  for (int i = 0; i < 2000; ++i) {
    inst.arcs.push_back({g.in(1, inst.n), g.in(1, inst.n), static_cast<double>(g.in(-10, 10)), g.in(1, 4)});
  }
  inst.min_length = 0;
  inst.max_length = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ratio::max_weight_path_bounded(inst));
}
BENCHMARK(BM_BoundedPath)->Arg(16)->Arg(64)->Arg(256);

void BM_RatioSegment(benchmark::State& state) {
  testing::Gen g(4);
  const auto items = testing::random_items(g, static_cast<int>(state.range(0)));
  const ratio::SegmentOptimizer opt(items.size(), {1, items.size()});
  for (auto _ : state) benchmark::DoNotOptimize(ratio::ratio_search(items, opt));
}
BENCHMARK(BM_RatioSegment)->Arg(1000)->Arg(100'000);

void BM_ToggleTreewidth(benchmark::State& state) {
  testing::Gen g(5);
  const auto [inst, td] = testing::random_bounded_width(g, static_cast<int>(state.range(0)), 4, 70);
  for (auto _ : state) benchmark::DoNotOptimize(toggle::toggle_treewidth_min_cost(inst, td));
}
BENCHMARK(BM_ToggleTreewidth)->Arg(1000)->Arg(10'000);

void BM_ToggleTree(benchmark::State& state) {
  testing::Gen g(6);
  const auto inst = testing::random_tree_instance(g, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(toggle::toggle_tree_min_cost(inst));
}
BENCHMARK(BM_ToggleTree)->Arg(10'000)->Arg(1'000'000);

}  // namespace
