#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "resproc/oracle.hpp"

namespace resproc::oracle {
namespace {

using transfer::Time;
using transfer::TimedEdge;

void transfer_dfs(std::span<const TimedEdge> edges, int v, Time now, Time waited, int d, Time deadline,
                  std::optional<Time>& best) {
  if (v == d && (!best || waited + (deadline - now) < *best)) best = waited + (deadline - now);
  for (const TimedEdge& e : edges) {
    if (e.from != v || e.tstart < now || e.tfinish > deadline) continue;
    transfer_dfs(edges, e.to, e.tfinish, waited + (e.tstart - now) + e.twait, d, deadline, best);
  }
}

// Every walk of total length <= max_length from `v`; calls visit(v, length, weight).
template <class Visit>
void walk_dfs(const ratio::LengthBoundedInstance& inst, int v, int length, double weight, const Visit& visit) {
  visit(v, length, weight);
  for (const ratio::WeightedArc& a : inst.arcs) {
    if (a.from != v || length + a.length > inst.max_length) continue;
    walk_dfs(inst, a.to, length + a.length, weight + a.weight, visit);
  }
}

void check_walk_size(const ratio::LengthBoundedInstance& inst) {
  if (inst.n > 6 || inst.max_length > 8 || inst.arcs.size() > 16) {
    throw CapacityError("walk enumeration supports n <= 6, U <= 8, at most 16 arcs");
  }
}

template <class Visit>
void simple_paths(int n, std::span<const ratio::WeightedArc> arcs, int start, int v, double weight,
                  std::vector<char>& on_path, const Visit& visit) {
  for (const ratio::WeightedArc& a : arcs) {
    if (a.from != v) continue;
    if (a.to == start) visit(weight + a.weight, true);
    if (on_path[a.to]) continue;
    visit(weight + a.weight, false);
    on_path[a.to] = 1;
    simple_paths(n, arcs, start, a.to, weight + a.weight, on_path, visit);
    on_path[a.to] = 0;
  }
}

}  // namespace

std::optional<Time> oracle_transfer(int n, std::span<const TimedEdge> edges, int s, int d, Time deadline) {
  if (n > 6 || edges.size() > 10) throw CapacityError("oracle_transfer supports n <= 6, m <= 10");
  std::optional<Time> best;
  transfer_dfs(edges, s, 0, 0, d, deadline, best);
  return best;
}

double oracle_ratio(std::span<const ratio::RatioItem> items, const SubsetPredicate& accept,
                    ratio::Objective objective) {
  const std::size_t m = items.size();
  if (m > 20) throw CapacityError("oracle_ratio supports at most 20 items");
  std::optional<double> best;
  std::vector<std::size_t> subset;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    subset.clear();
    double p = 0.0;
    double q = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) {
        subset.push_back(i);
        p += items[i].p;
        q += items[i].q;
      }
    }
    if (subset.empty() || !accept(subset)) continue;
    const double r = p / q;
    if (!best || (objective == ratio::Objective::kMaximize ? r > *best : r < *best)) best = r;
  }
  if (!best) throw InfeasibleError("no subset satisfies the property");
  return *best;
}

std::optional<double> oracle_max_walk(const ratio::LengthBoundedInstance& inst) {
  check_walk_size(inst);
  std::optional<double> best;
  for (int s = 1; s <= inst.n; ++s) {
    walk_dfs(inst, s, 0, 0.0, [&](int, int length, double weight) {
      if (length >= inst.min_length && (!best || weight > *best)) best = weight;
    });
  }
  return best;
}

std::optional<double> oracle_max_closed_walk(const ratio::LengthBoundedInstance& inst) {
  check_walk_size(inst);
  std::optional<double> best;
  const int lo = std::max(inst.min_length, 1);
  for (int s = 1; s <= inst.n; ++s) {
    walk_dfs(inst, s, 0, 0.0, [&](int v, int length, double weight) {
      if (v == s && length >= lo && (!best || weight > *best)) best = weight;
    });
  }
  return best;
}

std::optional<double> oracle_walk_ratio(const ratio::LengthBoundedInstance& shape,
                                        std::span<const ratio::RatioItem> items, bool closed) {
  check_walk_size(shape);
  std::optional<double> best;
  const int lo = std::max(shape.min_length, 1);
  auto dfs = [&](auto&& self, int s, int v, int length, double p, double q) -> void {
    if (length >= lo && (!closed || v == s)) {
      const double r = p / q;
      if (!best || r > *best) best = r;
    }
    for (std::size_t i = 0; i < shape.arcs.size(); ++i) {
      const ratio::WeightedArc& a = shape.arcs[i];
      if (a.from != v || length + a.length > shape.max_length) continue;
      self(self, s, a.to, length + a.length, p + items[i].p, q + items[i].q);
    }
  };
  for (int s = 1; s <= shape.n; ++s) dfs(dfs, s, s, 0, 0.0, 0.0);
  return best;
}

bool oracle_has_positive_cycle(int n, std::span<const ratio::WeightedArc> arcs) {
  if (n > 8) throw CapacityError("cycle enumeration supports n <= 8");
  bool found = false;
  std::vector<char> on_path(n + 1, 0);
  for (int s = 1; s <= n && !found; ++s) {
    on_path[s] = 1;
    simple_paths(n, arcs, s, s, 0.0, on_path, [&](double w, bool closed) {
      if (closed && w > 0) found = true;
    });
    on_path[s] = 0;
  }
  return found;
}

double oracle_best_simple_path(int n, std::span<const ratio::WeightedArc> arcs) {
  if (n > 8) throw CapacityError("path enumeration supports n <= 8");
  double best = 0.0;
  std::vector<char> on_path(n + 1, 0);
  for (int s = 1; s <= n; ++s) {
    on_path[s] = 1;
    simple_paths(n, arcs, s, s, 0.0, on_path, [&](double w, bool closed) {
      if (!closed) best = std::max(best, w);
    });
    on_path[s] = 0;
  }
  return best;
}

std::optional<double> oracle_max_segment(std::span<const double> seq, std::optional<ratio::LengthRange> bounds) {
  std::optional<double> best;
  if (!bounds) best = 0.0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = i; j < seq.size(); ++j) {
      sum += seq[j];
      const std::size_t len = j - i + 1;
      if (bounds && (len < bounds->min_length || len > bounds->max_length)) continue;
      if (!best || sum > *best) best = sum;
    }
  }
  return best;
}

std::optional<Cost> oracle_offer_mst(const mst::OfferGraph& g) {
  const int n = g.n;
  std::optional<Cost> best;
  for (int offer = 0; offer <= g.owners; ++offer) {
    // Cheapest price per vertex pair under this offer.
    std::vector<std::vector<Cost>> price(n + 1, std::vector<Cost>(n + 1, -1));
    for (const mst::OfferEdge& e : g.edges) {
      const Cost c = e.owner == offer ? e.special_price : e.normal_price;
      for (auto [a, b] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        if (price[a][b] < 0 || c < price[a][b]) price[a][b] = c;
      }
    }
    std::vector<char> in_tree(n + 1, 0);
    std::vector<Cost> dist(n + 1, -1);
    dist[1] = 0;
    Cost total = 0;
    bool connected = true;
    for (int step = 0; step < n; ++step) {
      int u = 0;
      for (int v = 1; v <= n; ++v) {
        if (!in_tree[v] && dist[v] >= 0 && (u == 0 || dist[v] < dist[u])) u = v;
      }
      if (u == 0) {
        connected = false;
        break;
      }
      in_tree[u] = 1;
      total += dist[u];
      for (int v = 1; v <= n; ++v) {
        if (!in_tree[v] && price[u][v] >= 0 && (dist[v] < 0 || price[u][v] < dist[v])) dist[v] = price[u][v];
      }
    }
    if (connected && (!best || total < *best)) best = total;
  }
  return best;
}

}  // namespace resproc::oracle
