#pragma once

// Minimum spanning tree when at most one edge owner's special offer may be
// used. Each owner's candidate tree only needs that owner's edges (at the
// special price) plus the normal-price tree edges of everybody else.

#include <optional>
#include <span>
#include <vector>

#include "resproc/common.hpp"

namespace resproc::mst {

struct OfferEdge {
  int a = 0;
  int b = 0;
  int owner = 0;  // 1..q
  Cost normal_price = 0;
  Cost special_price = 0;
};

struct OfferGraph {
  int n = 0;
  int owners = 0;  // q
  std::vector<OfferEdge> edges;
};

void validate_graph(const OfferGraph& g);

struct SpanningTree {
  Cost cost = 0;
  std::vector<int> edges;  // 1-based edge ids, ascending
};

/// MST under normal prices; nullopt when the graph is disconnected.
std::optional<SpanningTree> mst_normal(const OfferGraph& g);

/// MST under owner `owner`'s offer using only that owner's edges plus the
/// normal tree edges of other owners.
std::optional<SpanningTree> offer_mst_restricted(const OfferGraph& g, const SpanningTree& normal,
                                                 int owner);

struct OfferMstResult {
  std::optional<Cost> best_cost;     // nullopt: disconnected
  std::optional<int> chosen_offer;   // nullopt: the normal tree is optimal
  std::vector<int> tree_edges;

  bool connected() const { return best_cost.has_value(); }
};

/// Normal tree wins ties; among offers, the lowest owner id wins.
OfferMstResult best_offer_mst(const OfferGraph& g);

/// Price of edge `id` (1-based) when owner `offer` (or none) is active.
Cost edge_price(const OfferGraph& g, int id, std::optional<int> offer);

}  // namespace resproc::mst
