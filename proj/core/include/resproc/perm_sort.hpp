#pragma once

// Construction and sorting of permutations and multi-permutations. Every
// sorter returns an OpScript that apply_script() can replay.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "resproc/permutation.hpp"

namespace resproc::perm {

// --- average-free permutations ---------------------------------------------

enum class AvgFreeMethod : std::uint8_t { kPowerOfTwo, kMemoized };

/// No mean of two same-parity values sits positionally between them.
Permutation avg_free_permutation(int n, AvgFreeMethod method = AvgFreeMethod::kPowerOfTwo);

/// O(n^2) check of the average-free property.
bool is_average_free(std::span<const int> p);

// --- rotation sorts ---------------------------------------------------------

/// Split-rotation sort; rotation_case is 1 or 2.
OpScript sort_by_rotations_v1(const Permutation& p, int rotation_case);

/// Double-reversal sort using 2n steps.
OpScript sort_by_rotations_v2(const Permutation& p);

// --- swap sorts -------------------------------------------------------------

/// nullopt means IMPOSSIBLE: some value cannot reach its home position.
std::optional<OpScript> sort_by_allowed_swaps(const Permutation& p,
                                              std::span<const std::pair<int, int>> allowed);

struct CycleSortResult {
  Cost total_cost = 0;
  OpScript script;
};

/// costs[v-1] is the positive cost of value v; swapping x and y costs c(x)+c(y).
CycleSortResult min_cost_cycle_sort(const Permutation& p, std::span<const Cost> costs);

/// Total cost of a swap script under per-value costs, replayed from p.
Cost swap_script_cost(const Permutation& p, std::span<const Cost> costs, const OpScript& script);

// --- multi-permutations -----------------------------------------------------

struct CircularSortResult {
  std::int64_t swaps = 0;  // ni
  std::int64_t cost = 0;   // ci
  std::vector<int> rotation;
  int shift = 0;  // rotation = sorted order rotated left by shift
};

/// Minimal (ni, ci) over all rotations of the ascending arrangement; the
/// smallest shift wins ties.
CircularSortResult circular_multiperm_sort(const MultiPermutation& p);

/// (ni, ci) for one target arrangement q.
std::pair<std::int64_t, std::int64_t> circular_sort_cost(const MultiPermutation& p,
                                                          std::span<const int> q);

enum class InversionMethod : std::uint8_t { kMerge, kTree, kBlocks };

/// r must be a permutation of 1..n.
std::int64_t count_inversions(std::span<const int> r, InversionMethod method = InversionMethod::kMerge);

/// r(i) = the target position of p's i-th element, matching equal values in order.
std::vector<int> adjacent_swap_target(const MultiPermutation& p, const MultiPermutation& q);

struct AdjacentSwapResult {
  std::int64_t count = 0;
  std::optional<OpScript> script;
};

/// Throws ValidationError when p and q hold different multisets, and
/// CapacityError when a requested script would exceed kMaxScriptSteps.
AdjacentSwapResult min_adjacent_swaps(const MultiPermutation& p, const MultiPermutation& q,
                                      bool with_script = false);

// --- grouping identical values ------------------------------------------------

enum class GroupingMethod : std::uint8_t { kSjt, kBitmask };

inline constexpr int kMaxSjtValues = 10;
inline constexpr int kMaxBitmaskValues = 20;

/// num[a][b] = pairs of positions i<j with p(i)=a and p(j)=b; 1-based, row 0 unused.
using PairCounts = std::vector<std::vector<std::int64_t>>;
PairCounts pair_order_counts(const MultiPermutation& p);

/// Adjacent swaps needed to group p's values in `order`, from scratch.
std::int64_t grouping_cost(const PairCounts& num, std::span<const int> order);

struct GroupingResult {
  std::int64_t count = 0;
  std::vector<int> order;  // lexicographically smallest optimal value order
};

GroupingResult group_identical_min_swaps(const MultiPermutation& p, GroupingMethod method);

/// Steinhaus-Johnson-Trotter order over 1..k with O(1) amortized successor
/// (plain changes with direction and offset counters).
class SjtGenerator {
 public:
  explicit SjtGenerator(int k);

  std::span<const int> current() const { return perm_; }
  /// Advances to the next permutation and returns the 1-based i such that
  /// positions i and i+1 were exchanged; nullopt after the last one.
  std::optional<int> next();

 private:
  int k_;
  std::vector<int> perm_;
  std::vector<int> c_;
  std::vector<int> o_;
};

// --- move sort ----------------------------------------------------------------

/// Minimum total cost of sorting with Move(i, j) priced i + j.
Cost move_sort_min_cost(const Permutation& p);

}  // namespace resproc::perm
