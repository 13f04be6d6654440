#include <algorithm>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "resproc/oracle.hpp"
#include "resproc/toggle.hpp"

namespace resproc::toggle {
namespace {

using testing::Gen;

ToggleInstance path3(std::vector<int> target) {
  return ToggleInstance{3, {{1, 2}, {2, 3}}, {0, 0, 0}, std::move(target), {1, 1, 1}};
}

void expect_replays(const ToggleInstance& inst, const ToggleResult& r) {
  if (!r.feasible()) return;
  EXPECT_EQ(apply_selection(inst, r.selection), inst.target);
  EXPECT_EQ(selection_cost(inst, r.selection), *r.min_cost);
  EXPECT_TRUE(std::is_sorted(r.selection.begin(), r.selection.end()));
}

TEST(ToggleTree, Examples) {
  ToggleResult r = toggle_tree_min_cost(path3({1, 1, 1}));
  EXPECT_EQ(r.min_cost, 1);
  EXPECT_EQ(r.selection, std::vector<int>{2});
  r = toggle_tree_min_cost(path3({0, 0, 0}));
  EXPECT_EQ(r.min_cost, 0);
  EXPECT_TRUE(r.selection.empty());
  const ToggleInstance edge{2, {{1, 2}}, {0, 0}, {1, 0}, {1, 1}};
  EXPECT_FALSE(toggle_tree_min_cost(edge).feasible());
  EXPECT_FALSE(toggle_brute_force(edge).feasible());
}

TEST(ToggleTree, Validation) {
  const ToggleInstance cycle{3, {{1, 2}, {2, 3}, {1, 3}}, {0, 0, 0}, {0, 0, 0}, {1, 1, 1}};
  EXPECT_THROW(toggle_tree_min_cost(cycle), ValidationError);
  EXPECT_THROW(validate_instance(ToggleInstance{2, {{1, 1}}, {0, 0}, {0, 0}, {1, 1}}), ValidationError);
  EXPECT_THROW(validate_instance(ToggleInstance{2, {{1, 2}, {2, 1}}, {0, 0}, {0, 0}, {1, 1}}), ValidationError);
  EXPECT_THROW(validate_instance(ToggleInstance{1, {}, {2}, {0}, {1}}), ValidationError);
  EXPECT_THROW(validate_instance(ToggleInstance{1, {}, {0}, {0}, {-1}}), ValidationError);
}

TEST(ToggleBruteForce, Examples) {
  EXPECT_EQ(toggle_brute_force(ToggleInstance{0, {}, {}, {}, {}}).min_cost, 0);
  const ToggleResult r = toggle_brute_force(ToggleInstance{1, {}, {0}, {1}, {4}});
  EXPECT_EQ(r.min_cost, 4);
  EXPECT_EQ(r.selection, std::vector<int>{1});
  EXPECT_EQ(toggle_brute_force(path3({1, 1, 1})).min_cost, 1);
  ToggleInstance big;
  big.p = 25;
  big.initial.assign(25, 0);
  big.target.assign(25, 0);
  big.cost.assign(25, 1);
  EXPECT_THROW(toggle_brute_force(big), CapacityError);
}

TEST(Decomposition, Validation) {
  const ToggleInstance inst = path3({1, 1, 1});
  EXPECT_TRUE(validate_decomposition(inst, TreeDecomposition{{{1, 2}, {2, 3}}, {{1, 2}}, {}}).empty());

  const auto split = validate_decomposition(inst, TreeDecomposition{{{1, 2}, {2, 3}}, {}, {}});
  EXPECT_TRUE(std::any_of(split.begin(), split.end(), [](const Violation& v) {
    return v.kind == ViolationKind::kConnectivity && v.vertex == 2;
  }));

  const auto uncovered = validate_decomposition(inst, TreeDecomposition{{{1}, {2, 3}}, {{1, 2}}, {}});
  EXPECT_TRUE(std::any_of(uncovered.begin(), uncovered.end(), [](const Violation& v) {
    return v.kind == ViolationKind::kEdgeNotCovered && v.edge == std::pair{1, 2};
  }));

  const auto wide = validate_decomposition(inst, TreeDecomposition{{{1, 2, 3}}, {}, 2});
  EXPECT_TRUE(std::any_of(wide.begin(), wide.end(), [](const Violation& v) { return v.kind == ViolationKind::kWidth; }));

  const auto missing = validate_decomposition(inst, TreeDecomposition{{{1, 2}}, {}, {}});
  EXPECT_FALSE(missing.empty());
}

TEST(ToggleTreewidth, Examples) {
  const ToggleInstance p = path3({1, 1, 1});
  EXPECT_EQ(toggle_treewidth_min_cost(p, TreeDecomposition{{{1, 2}, {2, 3}}, {{1, 2}}, {}}).min_cost, 1);
  const ToggleInstance k3{3, {{1, 2}, {2, 3}, {1, 3}}, {0, 0, 0}, {1, 1, 1}, {1, 1, 1}};
  const ToggleResult r = toggle_treewidth_min_cost(k3, TreeDecomposition{{{1, 2, 3}}, {}, {}});
  EXPECT_EQ(r.min_cost, 1);
  expect_replays(k3, r);
  const ToggleInstance same{3, {{1, 2}, {2, 3}, {1, 3}}, {1, 0, 1}, {1, 0, 1}, {2, 3, 4}};
  EXPECT_EQ(toggle_treewidth_min_cost(same, TreeDecomposition{{{1, 2, 3}}, {}, {}}).min_cost, 0);
  EXPECT_THROW(toggle_treewidth_min_cost(p, TreeDecomposition{{{1}, {2, 3}}, {{1, 2}}, {}}), ValidationError);
}

TEST(ToggleProperty, TreeDpMatchesBruteForce) {
  Gen gen(71);
  for (int t = 0; t < 600; ++t) {
    const ToggleInstance inst = testing::random_tree_instance(gen, gen.in(1, 16), gen.chance(70));
    const ToggleResult r = toggle_tree_min_cost(inst);
    ASSERT_EQ(r.min_cost, oracle::oracle_toggle(inst).min_cost) << "case " << t;
    expect_replays(inst, r);
  }
}

TEST(ToggleProperty, TreewidthDpMatchesBruteForce) {
  Gen gen(72);
  for (int t = 0; t < 600; ++t) {
    const auto [inst, td] = testing::random_bounded_width(gen, gen.in(1, 14), gen.in(1, 3));
    ASSERT_TRUE(validate_decomposition(inst, td).empty());
    const ToggleResult r = toggle_treewidth_min_cost(inst, td);
    ASSERT_EQ(r.min_cost, oracle::oracle_toggle(inst).min_cost) << "case " << t;
    expect_replays(inst, r);
  }
}

TEST(ToggleProperty, TreewidthDpOnEdgeBagsMatchesTreeDp) {
  Gen gen(73);
  for (int t = 0; t < 500; ++t) {
    const ToggleInstance inst = testing::random_tree_instance(gen, gen.in(1, 40), gen.chance(70));
    const TreeDecomposition td = testing::edge_decomposition(inst);
    ASSERT_TRUE(validate_decomposition(inst, td).empty());
    const ToggleResult a = toggle_tree_min_cost(inst);
    const ToggleResult b = toggle_treewidth_min_cost(inst, td);
    ASSERT_EQ(a.min_cost, b.min_cost) << "case " << t;
    expect_replays(inst, b);
  }
}

TEST(ToggleProperty, SelectionOrderIsIrrelevant) {
  Gen gen(74);
  for (int t = 0; t < 200; ++t) {
    const auto [inst, td] = testing::random_bounded_width(gen, gen.in(1, 20), 3);
    std::vector<int> sel;
    for (int u = 1; u <= inst.p; ++u) {
      if (gen.chance(40)) sel.push_back(u);
    }
    const auto base = apply_selection(inst, sel);
    gen.shuffle(sel);
    EXPECT_EQ(apply_selection(inst, sel), base);
  }
}

}  // namespace
}  // namespace resproc::toggle
