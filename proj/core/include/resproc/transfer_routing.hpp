#pragma once

// Minimum-waiting-time packet transfer over reservation edges.
//
// Every edge can only be used by departing exactly at `tstart` and arriving
// exactly at `tfinish`; `twait` of that interval is queueing time. Idle time
// at a vertex (including at the source before the first departure and at the
// destination up to the deadline) also counts as waiting.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "resproc/common.hpp"

namespace resproc::transfer {

using Vertex = int;        // 1..n
using EdgeId = int;        // 1..m, input order
using Time = std::int64_t;

struct TimedEdge {
  Vertex from = 0;
  Vertex to = 0;
  Time tstart = 0;
  Time tfinish = 0;
  Time twait = 0;
};

enum class EdgeDirection : std::uint8_t { kIncoming, kOutgoing };

struct AdjacentEvent {
  EdgeId edge = 0;
  EdgeDirection direction = EdgeDirection::kIncoming;
  Time key = 0;  // tfinish for incoming, tstart for outgoing
};

/// Immutable after construction; safe to query concurrently.
class TimedGraph {
 public:
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const TimedEdge& edge(EdgeId id) const { return edges_[id - 1]; }
  std::span<const TimedEdge> edges() const { return edges_; }

  /// Events adjacent to v, ordered by key with incoming before outgoing at
  /// equal keys. Index 0 of the span is rank 1.
  std::span<const AdjacentEvent> events(Vertex v) const { return order_[v]; }
  std::size_t degree(Vertex v) const { return order_[v].size(); }

  /// 1-based rank of `edge` in the sorted order of `v`.
  std::size_t rank(Vertex v, EdgeId edge) const { return rank_[v].at(edge); }

 private:
  friend TimedGraph build_schedule(int n, std::vector<TimedEdge> edges);

  int n_ = 0;
  std::vector<TimedEdge> edges_;
  std::vector<std::vector<AdjacentEvent>> order_;
  std::vector<std::unordered_map<EdgeId, std::size_t>> rank_;
};

/// Validates edges (ids in range, tfinish > tstart, 0 <= twait <= duration,
/// no self-loops, non-negative times) and builds per-vertex event orders.
TimedGraph build_schedule(int n, std::vector<TimedEdge> edges);

struct ItineraryLeg {
  EdgeId edge = 0;
  Time depart = 0;
  Time arrive = 0;
};

struct TransferResult {
  std::optional<Time> total_wait;  // nullopt: no arrival at d by the deadline
  std::vector<ItineraryLeg> itinerary;

  bool feasible() const { return total_wait.has_value(); }
};

/// Sweeps all adjacency events in time order (O(m log m)).
TransferResult min_wait_transfer(const TimedGraph& g, Vertex s, Vertex d, Time deadline);

/// Same optimum computed as Dijkstra over the graph of (vertex, rank) pairs.
/// Kept as an independent route for cross-checking the sweep.
std::optional<Time> min_wait_transfer_pair_graph(const TimedGraph& g, Vertex s, Vertex d,
                                                 Time deadline);

/// Replays an itinerary from (s, 0) and returns the accumulated waiting time,
/// or nullopt if it is not chronologically valid or does not end at d by the
/// deadline.
std::optional<Time> replay_itinerary(const TimedGraph& g, Vertex s, Vertex d, Time deadline,
                                     std::span<const ItineraryLeg> itinerary);

}  // namespace resproc::transfer
