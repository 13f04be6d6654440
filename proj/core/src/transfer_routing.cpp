#include "resproc/transfer_routing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace resproc::transfer {
namespace {

constexpr Time kUnreachable = std::numeric_limits<Time>::max() / 4;

std::string edge_label(std::size_t index) { return "edge " + std::to_string(index + 1); }

void validate_edge(int n, const TimedEdge& e, std::size_t index) {
  if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) {
    throw ValidationError(edge_label(index) + ": endpoint out of range 1.." + std::to_string(n));
  }
  if (e.from == e.to) throw ValidationError(edge_label(index) + ": self-loop");
  if (e.tstart < 0) throw ValidationError(edge_label(index) + ": negative tstart");
  if (e.tfinish <= e.tstart) throw ValidationError(edge_label(index) + ": tfinish <= tstart");
  if (e.twait < 0 || e.twait > e.tfinish - e.tstart) {
    throw ValidationError(edge_label(index) + ": twait outside [0, tfinish - tstart]");
  }
}

// Flattened (vertex, rank) state space shared by both solvers.
struct StateSpace {
  std::vector<std::size_t> offset;  // offset[v] = index of (v, 0)

  explicit StateSpace(const TimedGraph& g) : offset(g.vertex_count() + 2, 0) {
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      offset[v + 1] = offset[v] + g.degree(v) + 1;
    }
  }
  std::size_t size() const { return offset.back(); }
  std::size_t index(Vertex v, std::size_t rank) const { return offset[v] + rank; }
};

Time time_at(const TimedGraph& g, Vertex v, std::size_t rank) {
  return rank == 0 ? 0 : g.events(v)[rank - 1].key;
}

struct StateRef {
  Vertex vertex = 0;
  std::size_t rank = 0;
  EdgeId via_edge = 0;  // 0: waited at the same vertex

  auto key() const { return std::tie(vertex, rank); }
};

// Picks the best final state at d; ties go to the earliest rank.
std::optional<std::pair<Time, std::size_t>> best_arrival(const TimedGraph& g,
                                                         const std::vector<Time>& best,
                                                         const StateSpace& states, Vertex s,
                                                         Vertex d, Time deadline) {
  std::optional<std::pair<Time, std::size_t>> answer;
  const std::size_t first = (s == d) ? 0 : 1;
  for (std::size_t i = first; i <= g.degree(d); ++i) {
    const Time tm = time_at(g, d, i);
    if (tm > deadline) break;
    const Time w = best[states.index(d, i)];
    if (w >= kUnreachable) continue;
    const Time total = w + (deadline - tm);
    if (!answer || total < answer->first) answer = std::make_pair(total, i);
  }
  return answer;
}

}  // namespace

TimedGraph build_schedule(int n, std::vector<TimedEdge> edges) {
  if (n < 0) throw ValidationError("vertex count must be non-negative");
  for (std::size_t i = 0; i < edges.size(); ++i) validate_edge(n, edges[i], i);

  TimedGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.order_.assign(n + 1, {});
  g.rank_.assign(n + 1, {});

  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const TimedEdge& e = g.edges_[i];
    const auto id = static_cast<EdgeId>(i + 1);
    g.order_[e.from].push_back({id, EdgeDirection::kOutgoing, e.tstart});
    g.order_[e.to].push_back({id, EdgeDirection::kIncoming, e.tfinish});
  }
  for (Vertex v = 1; v <= n; ++v) {
    auto& order = g.order_[v];
    std::sort(order.begin(), order.end(), [](const AdjacentEvent& a, const AdjacentEvent& b) {
      return std::tie(a.key, a.direction, a.edge) < std::tie(b.key, b.direction, b.edge);
    });
    auto& ranks = g.rank_[v];
    ranks.reserve(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) ranks.emplace(order[r].edge, r + 1);
  }
  return g;
}

TransferResult min_wait_transfer(const TimedGraph& g, Vertex s, Vertex d, Time deadline) {
  const int n = g.vertex_count();
  if (s < 1 || s > n || d < 1 || d > n) throw ValidationError("source/destination out of range");
  if (deadline < 0) throw ValidationError("deadline must be non-negative");

  const StateSpace states(g);
  std::vector<Time> best(states.size(), kUnreachable);
  std::vector<StateRef> pred(states.size());
  best[states.index(s, 0)] = 0;

  struct Moment {
    Time tm;
    Vertex v;
    std::size_t rank;
  };
  std::vector<Moment> moments;
  moments.reserve(2 * static_cast<std::size_t>(g.edge_count()));
  for (Vertex v = 1; v <= n; ++v) {
    const auto events = g.events(v);
    for (std::size_t i = 0; i < events.size(); ++i) moments.push_back({events[i].key, v, i + 1});
  }
  std::sort(moments.begin(), moments.end(), [](const Moment& a, const Moment& b) {
    return std::tie(a.tm, a.v, a.rank) < std::tie(b.tm, b.v, b.rank);
  });

  for (const Moment& m : moments) {
    const std::size_t here = states.index(m.v, m.rank);
    const std::size_t prev = here - 1;
    Time value = kUnreachable;
    StateRef from{m.v, m.rank - 1, 0};
    if (best[prev] < kUnreachable) {
      value = best[prev] + (m.tm - time_at(g, m.v, m.rank - 1));
    }

    const AdjacentEvent& ev = g.events(m.v)[m.rank - 1];
    if (ev.direction == EdgeDirection::kIncoming) {
      const TimedEdge& e = g.edge(ev.edge);
      const std::size_t j = g.rank(e.from, ev.edge);
      const Time via = best[states.index(e.from, j)];
      if (via < kUnreachable) {
        const Time candidate = via + e.twait;
        const StateRef alt{e.from, j, ev.edge};
        if (candidate < value || (candidate == value && alt.key() < from.key())) {
          value = candidate;
          from = alt;
        }
      }
    }
    best[here] = value;
    pred[here] = from;
  }

  TransferResult result;
  const auto arrival = best_arrival(g, best, states, s, d, deadline);
  if (!arrival) return result;
  result.total_wait = arrival->first;

  Vertex v = d;
  std::size_t rank = arrival->second;
  while (!(v == s && rank == 0)) {
    const StateRef& p = pred[states.index(v, rank)];
    if (p.via_edge != 0) {
      const TimedEdge& e = g.edge(p.via_edge);
      result.itinerary.push_back({p.via_edge, e.tstart, e.tfinish});
    }
    v = p.vertex;
    rank = p.rank;
  }
  std::reverse(result.itinerary.begin(), result.itinerary.end());
  return result;
}

std::optional<Time> min_wait_transfer_pair_graph(const TimedGraph& g, Vertex s, Vertex d,
                                                 Time deadline) {
  const int n = g.vertex_count();
  if (s < 1 || s > n || d < 1 || d > n) throw ValidationError("source/destination out of range");
  if (deadline < 0) throw ValidationError("deadline must be non-negative");

  const StateSpace states(g);
  std::vector<std::vector<std::pair<std::size_t, Time>>> arcs(states.size());
  for (Vertex v = 1; v <= n; ++v) {
    for (std::size_t i = 1; i <= g.degree(v); ++i) {
      arcs[states.index(v, i - 1)].emplace_back(states.index(v, i),
                                                time_at(g, v, i) - time_at(g, v, i - 1));
    }
  }
  for (EdgeId id = 1; id <= g.edge_count(); ++id) {
    const TimedEdge& e = g.edge(id);
    arcs[states.index(e.from, g.rank(e.from, id))].emplace_back(
        states.index(e.to, g.rank(e.to, id)), e.twait);
  }

  std::vector<Time> dist(states.size(), kUnreachable);
  using Item = std::pair<Time, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[states.index(s, 0)] = 0;
  heap.emplace(0, states.index(s, 0));
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du != dist[u]) continue;
    for (const auto& [v, w] : arcs[u]) {
      if (du + w < dist[v]) {
        dist[v] = du + w;
        heap.emplace(dist[v], v);
      }
    }
  }

  const auto arrival = best_arrival(g, dist, states, s, d, deadline);
  if (!arrival) return std::nullopt;
  return arrival->first;
}

std::optional<Time> replay_itinerary(const TimedGraph& g, Vertex s, Vertex d, Time deadline,
                                     std::span<const ItineraryLeg> itinerary) {
  Vertex at = s;
  Time now = 0;
  Time waited = 0;
  for (const ItineraryLeg& leg : itinerary) {
    if (leg.edge < 1 || leg.edge > g.edge_count()) return std::nullopt;
    const TimedEdge& e = g.edge(leg.edge);
    if (e.from != at || leg.depart != e.tstart || leg.arrive != e.tfinish) return std::nullopt;
    if (e.tstart < now) return std::nullopt;
    waited += (e.tstart - now) + e.twait;
    now = e.tfinish;
    at = e.to;
  }
  if (at != d || now > deadline) return std::nullopt;
  return waited + (deadline - now);
}

}  // namespace resproc::transfer
