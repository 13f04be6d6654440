#include <cmath>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "resproc/oracle.hpp"
#include "resproc/ratio_opt.hpp"

namespace resproc::ratio {
namespace {

using testing::Gen;

double amax(std::span<const RatioItem> items) {
  double p = 0.0;
  double q = items[0].q;
  for (const auto& it : items) {
    p = std::max(p, it.p);
    q = std::min(q, it.q);
  }
  return p / q;
}

TEST(RatioSearch, ExactlyOneItem) {
  const std::vector<RatioItem> items{{3, 1}, {1, 1}};
  const RatioResult r = ratio_search(items, SingleItemOptimizer(2));
  EXPECT_NEAR(r.ratio, 3.0, 1e-8);
  EXPECT_EQ(r.witness, std::vector<std::size_t>{0});
}

TEST(RatioSearch, SingleItem) {
  const std::vector<RatioItem> items{{4, 2}};
  EXPECT_NEAR(ratio_search(items, SingleItemOptimizer(1)).ratio, 2.0, 1e-8);
}

TEST(RatioSearch, ZeroProfit) {
  const std::vector<RatioItem> items{{0, 1}};
  EXPECT_NEAR(ratio_search(items, NonEmptySubsetOptimizer(1)).ratio, 0.0, 1e-12);
}

TEST(RatioSearch, Minimize) {
  const std::vector<RatioItem> items{{3, 1}, {1, 1}, {4, 2}};
  RatioSearchOptions o;
  o.objective = Objective::kMinimize;
  EXPECT_NEAR(ratio_search(items, SingleItemOptimizer(3), o).ratio, 1.0, 1e-8);
}

TEST(RatioSearch, Errors) {
  const std::vector<RatioItem> bad{{1, 0}};
  EXPECT_THROW(validate_items(bad), ValidationError);
  const std::vector<RatioItem> items{{1, 1}};
  const ExhaustiveOptimizer none(1, [](std::span<const std::size_t>, std::size_t) { return false; });
  EXPECT_THROW(ratio_search(items, none), InfeasibleError);
}

TEST(RatioSearchProperty, ExhaustiveOptimizerMatchesEnumeration) {
  Gen gen(21);
  for (int t = 0; t < 200; ++t) {
    const auto items = testing::random_items(gen, gen.in(2, 12));
    const ExhaustiveOptimizer opt(items.size(), [](std::span<const std::size_t> s, std::size_t) {
      return !s.empty() && s.size() % 2 == 0;
    });
    const RatioResult r = ratio_search(items, opt);
    const double expected = oracle::oracle_ratio(items, [](std::span<const std::size_t> s) { return s.size() % 2 == 0; });
    ASSERT_NEAR(r.ratio, expected, 1e-9 * amax(items) * 4) << "case " << t;
    EXPECT_GE(selection_ratio(items, r.witness), r.ratio - 1e-9 * amax(items) * 4);
  }
}

TEST(RatioSearchProperty, AnyNonEmptyMatchesEnumeration) {
  Gen gen(22);
  for (int t = 0; t < 200; ++t) {
    const auto items = testing::random_items(gen, gen.in(1, 12));
    const RatioResult r = ratio_search(items, NonEmptySubsetOptimizer(items.size()));
    EXPECT_NEAR(r.ratio, oracle::oracle_ratio(items, [](auto) { return true; }), 4e-9 * std::max(1.0, amax(items)));
  }
}

TEST(MaxWeightPath, Examples) {
  LengthBoundedInstance inst{2, {{1, 2, 5, 2}, {2, 1, -1, 1}}, 2, 3};
  auto w = max_weight_path_bounded(inst);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->weight, 5);
  EXPECT_EQ(w->arcs, std::vector<std::size_t>{0});

  inst.min_length = inst.max_length = 0;
  w = max_weight_path_bounded(inst);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->weight, 0);
  EXPECT_TRUE(w->arcs.empty());

  const LengthBoundedInstance far{2, {{1, 2, 1, 5}}, 1, 4};
  EXPECT_FALSE(max_weight_path_bounded(far));
}

TEST(MaxWeightCycle, Examples) {
  LengthBoundedInstance inst{2, {{1, 2, 3, 1}, {2, 1, -1, 1}}, 2, 2};
  auto w = max_weight_cycle_bounded(inst);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->weight, 2);
  inst.max_length = 4;
  w = max_weight_cycle_bounded(inst);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->weight, 4);
  inst.min_length = inst.max_length = 1;
  EXPECT_FALSE(max_weight_cycle_bounded(inst));
}

TEST(MaxWeightProperty, PathMatchesWalkEnumeration) {
  Gen gen(23);
  for (int t = 0; t < 500; ++t) {
    const auto inst = testing::random_walk_instance(gen, 5, 8, 6);
    const auto w = max_weight_path_bounded(inst);
    const auto expected = oracle::oracle_max_walk(inst);
    ASSERT_EQ(w.has_value(), expected.has_value()) << "case " << t;
    if (w) {
      EXPECT_DOUBLE_EQ(w->weight, *expected);
    }
  }
}

TEST(MaxWeightProperty, CycleMatchesClosedWalkEnumeration) {
  Gen gen(24);
  for (int t = 0; t < 500; ++t) {
    const auto inst = testing::random_walk_instance(gen, 5, 8, 6);
    const auto w = max_weight_cycle_bounded(inst);
    const auto expected = oracle::oracle_max_closed_walk(inst);
    ASSERT_EQ(w.has_value(), expected.has_value()) << "case " << t;
    if (w) {
      EXPECT_DOUBLE_EQ(w->weight, *expected);
      EXPECT_GE(w->length, 1);
    }
  }
}

TEST(UnboundedMaxWeight, Examples) {
  const std::vector<WeightedArc> negative{{1, 2, -1, 1}, {2, 1, -3, 1}};
  auto r = unbounded_max_weight(2, negative);
  ASSERT_TRUE(std::holds_alternative<UnboundedWeights>(r));
  EXPECT_EQ(std::get<UnboundedWeights>(r).path_weight, 0);

  const std::vector<WeightedArc> cycle{{1, 2, 3, 1}, {2, 1, -1, 1}};
  EXPECT_TRUE(std::holds_alternative<PlusInfinity>(unbounded_max_weight(2, cycle)));

  const std::vector<WeightedArc> single{{1, 2, 7, 1}};
  r = unbounded_max_weight(2, single);
  EXPECT_EQ(std::get<UnboundedWeights>(r).path_weight, 7);
}

TEST(UnboundedMaxWeightProperty, InfinityIffPositiveCycle) {
  Gen gen(25);
  for (int t = 0; t < 500; ++t) {
    const auto inst = testing::random_walk_instance(gen, 6, 9, 0);
    const auto r = unbounded_max_weight(inst.n, inst.arcs);
    const bool positive = oracle::oracle_has_positive_cycle(inst.n, inst.arcs);
    ASSERT_EQ(std::holds_alternative<PlusInfinity>(r), positive) << "case " << t;
    if (!positive) {
      EXPECT_DOUBLE_EQ(std::get<UnboundedWeights>(r).path_weight, oracle::oracle_best_simple_path(inst.n, inst.arcs));
    }
  }
}

TEST(MaxSumSegment, Examples) {
  const std::vector<double> seq{1, -2, 3, 4, -1};
  Segment s = max_sum_segment(seq);
  EXPECT_EQ(s.sum, 7);
  EXPECT_EQ(s.first, 3u);
  EXPECT_EQ(s.last, 4u);
  s = max_sum_segment(seq, LengthRange{2, 2});
  EXPECT_EQ(s.sum, 7);
  EXPECT_EQ(s.first, 3u);
  const std::vector<double> negative{-1, -2};
  EXPECT_TRUE(max_sum_segment(negative).empty());
  EXPECT_THROW(max_sum_segment(seq, LengthRange{0, 2}), ValidationError);
  EXPECT_THROW(max_sum_segment(seq, LengthRange{2, 6}), ValidationError);
}

TEST(MaxSumSegmentProperty, MatchesScan) {
  Gen gen(26);
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> seq(gen.in(1, 15));
    for (double& x : seq) x = gen.in(-10, 10);
    std::optional<LengthRange> bounds;
    if (gen.chance(50)) {
      const auto hi = static_cast<std::size_t>(gen.in(1, static_cast<int>(seq.size())));
      bounds = LengthRange{static_cast<std::size_t>(gen.in(1, static_cast<int>(hi))), hi};
    }
    const Segment s = max_sum_segment(seq, bounds);
    ASSERT_DOUBLE_EQ(s.sum, *oracle::oracle_max_segment(seq, bounds)) << "case " << t;
    if (!s.empty()) {
      double sum = 0;
      for (std::size_t i = s.first; i <= s.last; ++i) sum += seq[i - 1];
      EXPECT_DOUBLE_EQ(sum, s.sum);
    }
    // Full-range bounds agree with the unbounded version whenever that one is non-empty.
    const Segment free = max_sum_segment(seq);
    if (!free.empty()) {
      EXPECT_DOUBLE_EQ(max_sum_segment(seq, LengthRange{1, seq.size()}).sum, free.sum);
    }
  }
}

TEST(RatioOptimizers, PathAndSegmentMatchOracles) {
  Gen gen(27);
  for (int t = 0; t < 200; ++t) {
    auto shape = testing::random_walk_instance(gen, 4, 6, 5, 2, 1);
    if (shape.arcs.empty()) continue;
    const auto items = testing::random_items(gen, static_cast<int>(shape.arcs.size()));
    const auto expected = oracle::oracle_walk_ratio(shape, items, false);
    try {
      const RatioResult r = ratio_search(items, BoundedPathOptimizer(shape));
      ASSERT_TRUE(expected.has_value());
      EXPECT_NEAR(selection_ratio(items, r.witness), *expected, 4e-9 * std::max(1.0, amax(items)));
    } catch (const InfeasibleError&) {
      EXPECT_FALSE(expected.has_value());
    }
  }
  for (int t = 0; t < 200; ++t) {
    const auto items = testing::random_items(gen, gen.in(1, 12));
    const std::size_t hi = gen.in(1, static_cast<int>(items.size()));
    const LengthRange range{static_cast<std::size_t>(gen.in(1, static_cast<int>(hi))), hi};
    const RatioResult r = ratio_search(items, SegmentOptimizer(items.size(), range));
    const double expected = oracle::oracle_ratio(items, [&](std::span<const std::size_t> s) {
      return s.back() - s.front() + 1 == s.size() && s.size() >= range.min_length && s.size() <= range.max_length;
    });
    EXPECT_NEAR(selection_ratio(items, r.witness), expected, 4e-9 * std::max(1.0, amax(items)));
  }
}

}  // namespace
}  // namespace resproc::ratio
