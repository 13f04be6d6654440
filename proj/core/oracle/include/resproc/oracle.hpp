#pragma once

// Brute-force reference implementations. Deliberately slow: they enumerate
// walks, subsets or arrangement states and share no logic with the solvers.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "resproc/common.hpp"
#include "resproc/ordered_dsu.hpp"
#include "resproc/permutation.hpp"
#include "resproc/ratio_opt.hpp"
#include "resproc/spanning_offers.hpp"
#include "resproc/split_find.hpp"
#include "resproc/toggle.hpp"
#include "resproc/transfer_routing.hpp"

namespace resproc::oracle {

// --- transfer ---------------------------------------------------------------

/// Minimum total waiting time over every chronologically consistent edge
/// sequence; nullopt when d cannot be reached by T. n <= 6, m <= 10.
std::optional<transfer::Time> oracle_transfer(int n, std::span<const transfer::TimedEdge> edges, int s, int d,
                                              transfer::Time deadline);

// --- ratio ------------------------------------------------------------------

using SubsetPredicate = std::function<bool(std::span<const std::size_t>)>;

/// Best p-sum / q-sum over all subsets accepted by `accept`. At most 20
/// items. Throws InfeasibleError when nothing is accepted.
double oracle_ratio(std::span<const ratio::RatioItem> items, const SubsetPredicate& accept,
                    ratio::Objective objective = ratio::Objective::kMaximize);

/// Best walk weight with total length in [L, U] (empty walk when L = 0).
std::optional<double> oracle_max_walk(const ratio::LengthBoundedInstance& inst);

/// Best closed walk weight with length in [max(L, 1), U].
std::optional<double> oracle_max_closed_walk(const ratio::LengthBoundedInstance& inst);

/// Best p-sum / q-sum over walks (closed walks when `closed`) with total
/// length in [max(L, 1), U]; items[i] prices arc i of `shape`.
std::optional<double> oracle_walk_ratio(const ratio::LengthBoundedInstance& shape,
                                        std::span<const ratio::RatioItem> items, bool closed);

/// Enumerates simple cycles; n <= 8.
bool oracle_has_positive_cycle(int n, std::span<const ratio::WeightedArc> arcs);

/// Best simple path weight (empty path = 0); n <= 8.
double oracle_best_simple_path(int n, std::span<const ratio::WeightedArc> arcs);

/// O(n^2) scan. Unbounded allows the empty segment; nullopt when no segment
/// length fits the bounds.
std::optional<double> oracle_max_segment(std::span<const double> seq,
                                         std::optional<ratio::LengthRange> bounds = {});

// --- spanning trees with offers --------------------------------------------

/// Prim's algorithm once without an offer and once per owner; nullopt when
/// the graph is disconnected.
std::optional<Cost> oracle_offer_mst(const mst::OfferGraph& g);

// --- permutations -----------------------------------------------------------

enum class MoveKind : std::uint8_t { kSwap, kAdjacentSwap, kMove };

/// Cost of applying a move (i, j) to `arrangement`; nullopt forbids it.
/// For kAdjacentSwap, j = i + 1; for kMove, the element at i ends at j.
using MoveCost = std::function<std::optional<Cost>(const std::vector<int>& arrangement, int i, int j)>;
using GoalTest = std::function<bool(const std::vector<int>&)>;

inline constexpr int kMaxStateSearchLength = 8;

/// Uniform-cost search over arrangements; nullopt when the goal is unreachable.
std::optional<Cost> oracle_perm_state_search(const std::vector<int>& start, const GoalTest& goal, MoveKind kind,
                                             const MoveCost& cost);
std::optional<Cost> oracle_perm_state_search(const std::vector<int>& start, const std::vector<int>& target,
                                             MoveKind kind, const MoveCost& cost);

/// Unit-cost wrappers and the specific cost models.
std::optional<Cost> oracle_adjacent_swaps(const std::vector<int>& start, const std::vector<int>& target);
std::optional<Cost> oracle_value_cost_sort(const std::vector<int>& p, std::span<const Cost> costs);
std::optional<Cost> oracle_move_sort(const std::vector<int>& p);
bool oracle_sortable_with_swaps(const std::vector<int>& p, std::span<const std::pair<int, int>> allowed);
std::optional<Cost> oracle_group_min_swaps(const std::vector<int>& p);

/// Lexicographically minimal (swaps, sum of |i - j|) over arbitrary swaps
/// reaching any rotation of the ascending arrangement.
std::pair<std::int64_t, std::int64_t> oracle_circular_swaps(const std::vector<int>& p);

/// Direct evaluation of the circular-sort formulas: ni counts mismatched
/// positions, ci pairs the mismatched positions of each value in order.
std::pair<std::int64_t, std::int64_t> oracle_circular_formula(const std::vector<int>& p);

std::int64_t oracle_inversions(std::span<const int> r);

/// O(n^3) check over all position triples.
bool oracle_average_free(std::span<const int> p);

/// Replays a script one elementary operation at a time with hand-written
/// loops. Returns the final arrangement and the number of elementary steps.
std::pair<std::vector<int>, std::int64_t> oracle_replay(std::vector<int> start, const perm::OpScript& script);

// --- set maintenance --------------------------------------------------------

/// Rows kept as explicit lists; answers every query by a scan. n <= 64.
std::vector<sets::Value> oracle_ordered_sets(std::span<const sets::Value> weights, const sets::Aggregation& agg,
                                             std::span<const sets::SetOp> ops);

/// Interval list with split history; mirrors SplitFind's contract.
class NaiveIntervals {
 public:
  NaiveIntervals(int n, sets::Color initial);
  /// Returns false (and changes nothing) when the precondition fails.
  bool split(int i, int k, sets::Color left, sets::Color right);
  bool undo(int k, std::optional<sets::Color> recolor = std::nullopt);
  std::optional<sets::Color> query(int i) const;
  /// (start, end, color) in increasing start order.
  std::vector<std::tuple<int, int, sets::Color>> intervals() const;

 private:
  struct Piece {
    int end;
    sets::Color color;
  };
  struct Record {
    int start;
    int end;
    sets::Color color;
  };
  int n_;
  std::map<int, Piece> pieces_;
  std::map<int, Record> history_;
};

// --- toggling ---------------------------------------------------------------

toggle::ToggleResult oracle_toggle(const toggle::ToggleInstance& inst);

}  // namespace resproc::oracle
