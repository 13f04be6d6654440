#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "resproc/oracle.hpp"
#include "resproc/perm_sort.hpp"

namespace resproc::perm {
namespace {

using testing::Gen;

std::vector<int> vec(std::span<const int> v) { return {v.begin(), v.end()}; }

TEST(CircularSort, Examples) {
  CircularSortResult r = circular_multiperm_sort(MultiPermutation({2, 1, 2}));
  EXPECT_EQ(r.swaps, 0);
  EXPECT_EQ(r.cost, 0);
  EXPECT_EQ(r.rotation, (std::vector<int>{2, 1, 2}));
  r = circular_multiperm_sort(MultiPermutation({1, 1, 2, 3}));
  EXPECT_EQ(r.swaps, 0);
  EXPECT_EQ(r.shift, 0);
  r = circular_multiperm_sort(MultiPermutation({2, 1}));
  EXPECT_EQ(r.swaps, 0);
  EXPECT_EQ(r.rotation, (std::vector<int>{2, 1}));
}

TEST(CircularSortProperty, MatchesDirectFormula) {
  Gen gen(51);
  for (int t = 0; t < 1000; ++t) {
    const int n = gen.in(1, 12);
    const auto p = gen.multiperm(n, gen.in(1, n));
    const CircularSortResult r = circular_multiperm_sort(MultiPermutation(p));
    ASSERT_EQ(std::pair(r.swaps, r.cost), oracle::oracle_circular_formula(p)) << "case " << t;
    EXPECT_EQ(circular_sort_cost(MultiPermutation(p), r.rotation), std::pair(r.swaps, r.cost));
    // Already circularly sorted inputs cost nothing.
    EXPECT_EQ(circular_multiperm_sort(MultiPermutation(r.rotation)).cost, 0);
  }
}

TEST(Inversions, Examples) {
  for (auto m : {InversionMethod::kMerge, InversionMethod::kTree, InversionMethod::kBlocks}) {
    EXPECT_EQ(count_inversions(std::vector<int>{1, 2, 3}, m), 0);
    EXPECT_EQ(count_inversions(std::vector<int>{3, 2, 1}, m), 3);
    EXPECT_EQ(count_inversions(std::vector<int>{2, 1, 4, 3}, m), 2);
  }
  EXPECT_THROW(count_inversions(std::vector<int>{1, 1}), ValidationError);
}

TEST(InversionsProperty, MethodsAgreeWithPairCount) {
  Gen gen(52);
  for (int t = 0; t < 1000; ++t) {
    const auto r = gen.permutation(gen.in(1, 200));
    const std::int64_t expected = oracle::oracle_inversions(r);
    ASSERT_EQ(count_inversions(r, InversionMethod::kMerge), expected);
    ASSERT_EQ(count_inversions(r, InversionMethod::kTree), expected);
    ASSERT_EQ(count_inversions(r, InversionMethod::kBlocks), expected);
  }
}

TEST(AdjacentSwaps, Examples) {
  EXPECT_EQ(min_adjacent_swaps(MultiPermutation({2, 1}), MultiPermutation({1, 2})).count, 1);
  const MultiPermutation p({1, 2, 2, 1});
  const MultiPermutation q({2, 1, 1, 2});
  EXPECT_EQ(adjacent_swap_target(p, q), (std::vector<int>{2, 1, 4, 3}));
  const AdjacentSwapResult r = min_adjacent_swaps(p, q, true);
  EXPECT_EQ(r.count, 2);
  ASSERT_TRUE(r.script);
  EXPECT_EQ(apply_script(vec(p.values()), *r.script), vec(q.values()));
  EXPECT_EQ(min_adjacent_swaps(p, p).count, 0);
  EXPECT_THROW(min_adjacent_swaps(MultiPermutation({1, 2}), MultiPermutation({1, 2, 2})), ValidationError);
}

TEST(AdjacentSwapsProperty, MatchesBreadthFirstSearch) {
  Gen gen(53);
  for (int t = 0; t < 500; ++t) {
    const int n = gen.in(1, 8);
    const auto p = gen.multiperm(n, gen.in(1, std::min(n, 3)));
    auto q = p;
    gen.shuffle(q);
    const AdjacentSwapResult r = min_adjacent_swaps(MultiPermutation(p), MultiPermutation(q), true);
    ASSERT_EQ(r.count, oracle::oracle_adjacent_swaps(p, q)) << "case " << t;
    ASSERT_TRUE(r.script);
    EXPECT_EQ(static_cast<std::int64_t>(r.script->steps.size()), r.count);
    EXPECT_EQ(apply_script(p, *r.script), q);
  }
}

TEST(AdjacentSwapsProperty, LinearFormulaForTwoValues) {
  Gen gen(54);
  for (int t = 0; t < 1000; ++t) {
    const int n = gen.in(2, 60);
    const auto p = gen.multiperm(n, 2);
    auto q = p;
    gen.shuffle(q);
    // Sum over the ones of |position in p - position in q|.
    std::vector<int> lp, lq;
    for (int i = 0; i < n; ++i) {
      if (p[i] == 1) lp.push_back(i);
      if (q[i] == 1) lq.push_back(i);
    }
    std::int64_t formula = 0;
    for (std::size_t i = 0; i < lp.size(); ++i) formula += std::abs(lp[i] - lq[i]);
    EXPECT_EQ(min_adjacent_swaps(MultiPermutation(p), MultiPermutation(q)).count, formula);
  }
}

TEST(Grouping, Examples) {
  for (auto m : {GroupingMethod::kSjt, GroupingMethod::kBitmask}) {
    EXPECT_EQ(group_identical_min_swaps(MultiPermutation({1, 1, 2, 2}), m).count, 0);
    const GroupingResult r = group_identical_min_swaps(MultiPermutation({1, 2, 1, 2}), m);
    EXPECT_EQ(r.count, 1);
    EXPECT_EQ(r.order, (std::vector<int>{1, 2}));
    EXPECT_EQ(group_identical_min_swaps(MultiPermutation({1, 2, 3, 1}), m).count, 2);
  }
  std::vector<int> wide(11);
  for (int i = 0; i < 11; ++i) wide[i] = i + 1;
  EXPECT_THROW(group_identical_min_swaps(MultiPermutation(wide), GroupingMethod::kSjt), CapacityError);
}

TEST(GroupingProperty, MethodsAgreeWithSearch) {
  Gen gen(55);
  for (int t = 0; t < 400; ++t) {
    const int n = gen.in(1, 8);
    const auto p = gen.multiperm(n, gen.in(1, std::min(n, 4)));
    const GroupingResult a = group_identical_min_swaps(MultiPermutation(p), GroupingMethod::kSjt);
    const GroupingResult b = group_identical_min_swaps(MultiPermutation(p), GroupingMethod::kBitmask);
    ASSERT_EQ(a.count, b.count);
    EXPECT_EQ(a.order, b.order);
    ASSERT_EQ(a.count, oracle::oracle_group_min_swaps(p)) << "case " << t;
    EXPECT_EQ(grouping_cost(pair_order_counts(MultiPermutation(p)), a.order), a.count);
  }
}

TEST(GroupingProperty, LargerValueCountsAgree) {
  Gen gen(56);
  for (int t = 0; t < 30; ++t) {
    const int k = gen.in(5, 9);
    const auto p = gen.multiperm(gen.in(k, 40), k);
    EXPECT_EQ(group_identical_min_swaps(MultiPermutation(p), GroupingMethod::kSjt).count,
              group_identical_min_swaps(MultiPermutation(p), GroupingMethod::kBitmask).count);
  }
}

TEST(Sjt, VisitsEveryPermutationByAdjacentSwaps) {
  for (int k = 1; k <= 6; ++k) {
    SjtGenerator sjt(k);
    std::set<std::vector<int>> seen{vec(sjt.current())};
    std::vector<int> prev = vec(sjt.current());
    while (auto i = sjt.next()) {
      std::vector<int> cur = vec(sjt.current());
      std::swap(prev[*i - 1], prev[*i]);
      ASSERT_EQ(prev, cur);
      seen.insert(cur);
    }
    std::int64_t fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), fact);
  }
}

TEST(Sjt, IncrementalCostMatchesRecomputation) {
  Gen gen(57);
  for (int k = 1; k <= 6; ++k) {
    const auto p = gen.multiperm(gen.in(k, 14), k);
    const PairCounts num = pair_order_counts(MultiPermutation(p));
    SjtGenerator sjt(k);
    std::int64_t v = grouping_cost(num, sjt.current());
    while (true) {
      const std::vector<int> before = vec(sjt.current());
      const auto i = sjt.next();
      if (!i) break;
      const int a = before[*i - 1];
      const int b = before[*i];
      v += num[a][b] - num[b][a];
      ASSERT_EQ(v, grouping_cost(num, sjt.current()));
    }
  }
}

}  // namespace
}  // namespace resproc::perm
