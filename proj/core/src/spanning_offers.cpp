#include "resproc/spanning_offers.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "resproc/disjoint_set.hpp"

namespace resproc::mst {
namespace {

struct PricedEdge {
  Cost price;
  int id;
};

// Kruskal over the given candidates, sorted by (price, id).
std::optional<SpanningTree> kruskal(const OfferGraph& g, std::vector<PricedEdge> candidates) {
  std::sort(candidates.begin(), candidates.end(), [](const PricedEdge& x, const PricedEdge& y) {
    return std::tie(x.price, x.id) < std::tie(y.price, y.id);
  });
  sets::DisjointSet dsu(g.n);
  SpanningTree tree;
  for (const PricedEdge& c : candidates) {
    const OfferEdge& e = g.edges[c.id - 1];
    if (!dsu.unite(e.a, e.b)) continue;
    tree.cost += c.price;
    tree.edges.push_back(c.id);
    if (static_cast<int>(tree.edges.size()) == g.n - 1) break;
  }
  if (static_cast<int>(tree.edges.size()) != std::max(g.n - 1, 0)) return std::nullopt;
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

// SE(owner): the owner's edges at special price plus the other owners' edges
// of the normal tree at normal price.
std::optional<SpanningTree> restricted_tree(const OfferGraph& g, std::span<const int> owned,
                                            const SpanningTree& normal, int owner) {
  std::vector<PricedEdge> candidates;
  candidates.reserve(owned.size() + normal.edges.size());
  for (int id : owned) candidates.push_back({g.edges[id - 1].special_price, id});
  for (int id : normal.edges) {
    if (g.edges[id - 1].owner != owner) candidates.push_back({g.edges[id - 1].normal_price, id});
  }
  return kruskal(g, std::move(candidates));
}

}  // namespace

void validate_graph(const OfferGraph& g) {
  if (g.n < 1) throw ValidationError("graph needs at least one vertex");
  if (g.owners < 0) throw ValidationError("owner count must be non-negative");
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const OfferEdge& e = g.edges[i];
    const std::string where = "edge " + std::to_string(i + 1);
    if (e.a < 1 || e.a > g.n || e.b < 1 || e.b > g.n) {
      throw ValidationError(where + ": endpoint out of range");
    }
    if (e.a == e.b) throw ValidationError(where + ": endpoints must differ");
    if (e.owner < 1 || e.owner > g.owners) throw ValidationError(where + ": owner out of range");
    if (e.normal_price < 0 || e.special_price < 0) {
      throw ValidationError(where + ": prices must be non-negative");
    }
    if (e.special_price > e.normal_price) {
      throw ValidationError(where + ": special price exceeds normal price");
    }
  }
}

Cost edge_price(const OfferGraph& g, int id, std::optional<int> offer) {
  const OfferEdge& e = g.edges[id - 1];
  return offer && e.owner == *offer ? e.special_price : e.normal_price;
}

std::optional<SpanningTree> mst_normal(const OfferGraph& g) {
  validate_graph(g);
  std::vector<PricedEdge> all;
  all.reserve(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    all.push_back({g.edges[i].normal_price, static_cast<int>(i + 1)});
  }
  return kruskal(g, std::move(all));
}

std::optional<SpanningTree> offer_mst_restricted(const OfferGraph& g, const SpanningTree& normal,
                                                 int owner) {
  std::vector<int> owned;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].owner == owner) owned.push_back(static_cast<int>(i + 1));
  }
  return restricted_tree(g, owned, normal, owner);
}

OfferMstResult best_offer_mst(const OfferGraph& g) {
  OfferMstResult result;
  const auto normal = mst_normal(g);
  if (!normal) return result;
  result.best_cost = normal->cost;
  result.tree_edges = normal->edges;

  // Group edges per owner once so each restricted instance costs
  // O((|SE(i)| + n) log n).
  std::vector<std::vector<int>> owned(g.owners + 1);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    owned[g.edges[i].owner].push_back(static_cast<int>(i + 1));
  }

  for (int owner = 1; owner <= g.owners; ++owner) {
    if (owned[owner].empty()) continue;
    const auto tree = restricted_tree(g, owned[owner], *normal, owner);
    if (tree && tree->cost < *result.best_cost) {
      result.best_cost = tree->cost;
      result.chosen_offer = owner;
      result.tree_edges = tree->edges;
    }
  }
  return result;
}

}  // namespace resproc::mst
