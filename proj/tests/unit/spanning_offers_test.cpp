#include <gtest/gtest.h>

#include "generators.hpp"
#include "resproc/disjoint_set.hpp"
#include "resproc/oracle.hpp"
#include "resproc/spanning_offers.hpp"

namespace resproc::mst {
namespace {

using testing::Gen;

// The same graph with every edge priced under `offer` and no offers left.
OfferGraph priced_under(const OfferGraph& g, int offer) {
  OfferGraph h = g;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    h.edges[i].normal_price = h.edges[i].special_price = edge_price(g, static_cast<int>(i) + 1, offer);
  }
  return h;
}

void expect_spanning_tree(const OfferGraph& g, const OfferMstResult& r) {
  ASSERT_EQ(r.tree_edges.size(), static_cast<std::size_t>(g.n - 1));
  sets::DisjointSet dsu(g.n);
  Cost total = 0;
  for (int id : r.tree_edges) {
    const OfferEdge& e = g.edges.at(id - 1);
    EXPECT_TRUE(dsu.unite(e.a, e.b));
    total += edge_price(g, id, r.chosen_offer);
  }
  EXPECT_EQ(total, r.best_cost);
}

TEST(MstNormal, Examples) {
  OfferGraph tri{3, 1, {{1, 2, 1, 5, 5}, {2, 3, 1, 2, 2}, {1, 3, 1, 10, 10}}};
  const auto t = mst_normal(tri);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->cost, 7);
  EXPECT_EQ(t->edges, (std::vector<int>{1, 2}));

  const auto single = mst_normal(OfferGraph{1, 0, {}});
  ASSERT_TRUE(single);
  EXPECT_EQ(single->cost, 0);
  EXPECT_FALSE(mst_normal(OfferGraph{2, 0, {}}));
}

TEST(BestOfferMst, Examples) {
  const OfferGraph g{3, 2, {{1, 2, 1, 5, 1}, {2, 3, 2, 2, 2}, {1, 3, 1, 10, 3}}};
  const OfferMstResult r = best_offer_mst(g);
  EXPECT_EQ(r.best_cost, 3);
  EXPECT_EQ(r.chosen_offer, 1);
  EXPECT_EQ(r.tree_edges, (std::vector<int>{1, 2}));

  const OfferGraph same{3, 1, {{1, 2, 1, 4, 4}, {2, 3, 1, 2, 2}}};
  EXPECT_EQ(best_offer_mst(same).best_cost, 6);
  EXPECT_FALSE(best_offer_mst(same).chosen_offer);

  const OfferGraph all_one{3, 1, {{1, 2, 1, 4, 1}, {2, 3, 1, 2, 2}, {1, 3, 1, 3, 0}}};
  EXPECT_EQ(best_offer_mst(all_one).best_cost, 1);
}

TEST(BestOfferMst, Validation) {
  EXPECT_THROW(validate_graph(OfferGraph{2, 1, {{1, 1, 1, 1, 1}}}), ValidationError);
  EXPECT_THROW(validate_graph(OfferGraph{2, 1, {{1, 2, 2, 1, 1}}}), ValidationError);
  EXPECT_THROW(validate_graph(OfferGraph{2, 1, {{1, 2, 1, 1, 2}}}), ValidationError);
  EXPECT_FALSE(best_offer_mst(OfferGraph{3, 1, {{1, 2, 1, 1, 1}}}).connected());
}

TEST(BestOfferMstProperty, MatchesPerOfferPrim) {
  Gen gen(31);
  for (int t = 0; t < 1000; ++t) {
    const OfferGraph g = testing::random_offer_graph(gen, 6, 12, 4);
    const OfferMstResult r = best_offer_mst(g);
    ASSERT_EQ(r.best_cost, oracle::oracle_offer_mst(g)) << "case " << t;
    if (r.connected()) {
      expect_spanning_tree(g, r);
      EXPECT_LE(*r.best_cost, mst_normal(g)->cost);
    }
  }
}

TEST(BestOfferMstProperty, RestrictionIsSound) {
  Gen gen(32);
  for (int t = 0; t < 500; ++t) {
    const OfferGraph g = testing::random_offer_graph(gen, 8, 20, 4);
    const auto normal = mst_normal(g);
    if (!normal) continue;
    for (int owner = 1; owner <= g.owners; ++owner) {
      const auto restricted = offer_mst_restricted(g, *normal, owner);
      const auto full = mst_normal(priced_under(g, owner));
      ASSERT_TRUE(restricted && full);
      EXPECT_EQ(restricted->cost, full->cost) << "case " << t << " owner " << owner;
    }
  }
}

}  // namespace
}  // namespace resproc::mst
