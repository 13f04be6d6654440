#include <algorithm>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "resproc/oracle.hpp"
#include "resproc/perm_sort.hpp"

namespace resproc::perm {
namespace {

using testing::Gen;

std::vector<int> sorted(std::span<const int> v) {
  std::vector<int> s(v.begin(), v.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> vec(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

// Both interpreters agree and the result is sorted.
void expect_sorts(const Permutation& p, const OpScript& s) {
  const auto fast = apply_script(vec(p), s);
  const auto [slow, elementary] = oracle::oracle_replay(vec(p), s);
  EXPECT_EQ(fast, slow);
  EXPECT_EQ(fast, sorted(p.values()));
  EXPECT_EQ(elementary, s.elementary_operations());
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1}), ValidationError);
  EXPECT_THROW(Permutation({0, 1}), ValidationError);
  EXPECT_THROW(MultiPermutation({1, 3}), ValidationError);
  const MultiPermutation m({2, 1, 2});
  EXPECT_EQ(m.distinct(), 2);
  EXPECT_EQ(std::vector<int>(m.occurrences(2).begin(), m.occurrences(2).end()), (std::vector<int>{1, 3}));
}

TEST(ApplyScript, RejectsBadSteps) {
  OpScript s{ScriptKind::kSwap, 1, {SwapStep{1, 3}}};
  EXPECT_THROW(apply_script({1, 2}, s), ValidationError);
  s.steps = {AdjacentSwapStep{1}};
  EXPECT_THROW(apply_script({1, 2}, s), ValidationError);
}

TEST(AvgFree, Examples) {
  EXPECT_EQ(vec(avg_free_permutation(1)), std::vector<int>{1});
  EXPECT_EQ(vec(avg_free_permutation(2)), (std::vector<int>{2, 1}));
  EXPECT_EQ(vec(avg_free_permutation(4)), (std::vector<int>{4, 2, 3, 1}));
  EXPECT_EQ(vec(avg_free_permutation(4, AvgFreeMethod::kMemoized)), (std::vector<int>{4, 2, 3, 1}));
}

TEST(AvgFreeProperty, BothMethodsPassTripleChecker) {
  for (int n = 1; n <= 160; ++n) {
    const Permutation a = avg_free_permutation(n);
    const Permutation b = avg_free_permutation(n, AvgFreeMethod::kMemoized);
    ASSERT_TRUE(oracle::oracle_average_free(a.values())) << n;
    ASSERT_TRUE(oracle::oracle_average_free(b.values())) << n;
    EXPECT_TRUE(is_average_free(a.values()));
  }
  EXPECT_FALSE(is_average_free(std::vector<int>{1, 2, 3}));
  EXPECT_FALSE(oracle::oracle_average_free(std::vector<int>{1, 2, 3}));
}

TEST(RotationSort, Examples) {
  expect_sorts(Permutation::identity(5), sort_by_rotations_v1(Permutation::identity(5), 1));
  expect_sorts(Permutation({2, 1}), sort_by_rotations_v1(Permutation({2, 1}), 1));
  expect_sorts(Permutation({2, 1}), sort_by_rotations_v1(Permutation({2, 1}), 2));
  const OpScript two = sort_by_rotations_v2(Permutation({2, 1}));
  expect_sorts(Permutation({2, 1}), two);
  EXPECT_LE(two.steps.size(), 5u);
  const OpScript three = sort_by_rotations_v2(Permutation({3, 1, 2}));
  expect_sorts(Permutation({3, 1, 2}), three);
  EXPECT_LE(three.steps.size(), 11u);
}

TEST(RotationSortProperty, SortsWithinBounds) {
  Gen gen(41);
  for (int t = 0; t < 600; ++t) {
    const int n = gen.in(1, 40);
    const Permutation p(gen.permutation(n));
    for (int c : {1, 2}) {
      const OpScript s = sort_by_rotations_v1(p, c);
      expect_sorts(p, s);
      EXPECT_LE(s.elementary_operations(), 4LL * n * n);
    }
    const OpScript v2 = sort_by_rotations_v2(p);
    expect_sorts(p, v2);
    EXPECT_LE(v2.steps.size(), static_cast<std::size_t>(3 * n + 2));
  }
}

TEST(AllowedSwaps, Examples) {
  const std::vector<std::pair<int, int>> one{{1, 2}};
  const auto s = sort_by_allowed_swaps(Permutation({2, 1, 3}), one);
  ASSERT_TRUE(s);
  ASSERT_EQ(s->steps.size(), 1u);
  EXPECT_EQ(std::get<SwapStep>(s->steps[0]).i, 1);
  EXPECT_EQ(std::get<SwapStep>(s->steps[0]).j, 2);
  EXPECT_FALSE(sort_by_allowed_swaps(Permutation({2, 1}), {}));
  const std::vector<std::pair<int, int>> chain{{1, 2}, {2, 3}};
  const auto r = sort_by_allowed_swaps(Permutation({3, 2, 1}), chain);
  ASSERT_TRUE(r);
  expect_sorts(Permutation({3, 2, 1}), *r);
}

TEST(AllowedSwapsProperty, ImpossibleExactlyWhenUnreachable) {
  Gen gen(42);
  for (int t = 0; t < 500; ++t) {
    const int n = gen.in(1, 7);
    const Permutation p(gen.permutation(n));
    std::vector<std::pair<int, int>> allowed;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (gen.chance(30)) allowed.emplace_back(b, a);
      }
    }
    const auto s = sort_by_allowed_swaps(p, allowed);
    ASSERT_EQ(s.has_value(), oracle::oracle_sortable_with_swaps(vec(p), allowed)) << "case " << t;
    if (!s) continue;
    expect_sorts(p, *s);
    for (const ScriptStep& step : s->steps) {
      const auto& w = std::get<SwapStep>(step);
      EXPECT_TRUE(std::count(allowed.begin(), allowed.end(), std::pair{w.j, w.i}) +
                  std::count(allowed.begin(), allowed.end(), std::pair{w.i, w.j}));
    }
  }
}

TEST(CycleSort, Examples) {
  const std::vector<Cost> ones{1, 1};
  const CycleSortResult r = min_cost_cycle_sort(Permutation({2, 1}), ones);
  EXPECT_EQ(r.total_cost, 2);
  EXPECT_EQ(r.script.steps.size(), 1u);
  EXPECT_EQ(min_cost_cycle_sort(Permutation::identity(3), std::vector<Cost>{1, 1, 1}).total_cost, 0);
  const Permutation p({1, 3, 4, 5, 6, 2});
  const std::vector<Cost> c{1, 10, 10, 10, 10, 10};
  const CycleSortResult big = min_cost_cycle_sort(p, c);
  EXPECT_EQ(big.total_cost, 66);
  EXPECT_EQ(swap_script_cost(p, c, big.script), 66);
  expect_sorts(p, big.script);
}

TEST(CycleSortProperty, MatchesUniformCostSearch) {
  Gen gen(43);
  for (int t = 0; t < 400; ++t) {
    const int n = gen.in(1, 6);
    const Permutation p(gen.permutation(n));
    std::vector<Cost> c(n);
    for (Cost& x : c) x = gen.in(1, 5);
    const CycleSortResult r = min_cost_cycle_sort(p, c);
    ASSERT_EQ(r.total_cost, oracle::oracle_value_cost_sort(vec(p), c)) << "case " << t;
    EXPECT_EQ(swap_script_cost(p, c, r.script), r.total_cost);
    expect_sorts(p, r.script);
  }
}

TEST(MoveSort, Examples) {
  EXPECT_EQ(move_sort_min_cost(Permutation::identity(4)), 0);
  EXPECT_EQ(move_sort_min_cost(Permutation({2, 1})), 3);
  EXPECT_EQ(move_sort_min_cost(Permutation({3, 1, 2})), 4);
}

TEST(MoveSortProperty, AllPermutationsOfFive) {
  std::vector<int> p{1, 2, 3, 4, 5};
  do {
    ASSERT_EQ(move_sort_min_cost(Permutation(p)), oracle::oracle_move_sort(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST(StateSearch, OracleExamples) {
  EXPECT_EQ(oracle::oracle_adjacent_swaps({2, 1}, {1, 2}), 1);
  EXPECT_EQ(oracle::oracle_value_cost_sort({2, 1}, std::vector<Cost>{1, 1}), 2);
  EXPECT_EQ(oracle::oracle_move_sort({2, 1}), 3);
  EXPECT_THROW(oracle::oracle_move_sort(std::vector<int>(9, 1)), CapacityError);
}

}  // namespace
}  // namespace resproc::perm
