#pragma once

// Parametric search for maximum / minimum ratio subsets, plus the additive
// solvers that plug into it: length-bounded max-weight walks and closed walks,
// positive-cycle detection for the unbounded case, and max-sum segments.

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "resproc/common.hpp"

namespace resproc::ratio {

struct RatioItem {
  double p = 0.0;  // >= 0
  double q = 1.0;  // > 0
};

void validate_items(std::span<const RatioItem> items);

/// A feasible selection under the optimizer's property. Indices are 0-based
/// item indices and may repeat (walks can reuse an edge).
struct Selection {
  double value = 0.0;
  std::vector<std::size_t> witness;
};

/// Maximizes the summed weight over the selections satisfying some property.
/// The returned witness must sum (with multiplicity) to the returned value.
class AdditiveOptimizer {
 public:
  virtual ~AdditiveOptimizer() = default;
  virtual std::size_t item_count() const = 0;
  virtual std::optional<Selection> maximize(std::span<const double> weights) const = 0;
};

enum class Objective { kMaximize, kMinimize };

struct RatioSearchOptions {
  Objective objective = Objective::kMaximize;
  double relative_eps = 1e-9;  // interval width limit, relative to max p / min q
  int max_iterations = 200;
};

struct RatioResult {
  double ratio = 0.0;
  std::vector<std::size_t> witness;
  int iterations = 0;
};

/// Binary search on the candidate ratio A: the optimizer is run on weights
/// p - A*q and its sign decides the half. Throws InfeasibleError when the
/// optimizer has no feasible selection, and std::logic_error when its optimum
/// fails to be non-increasing in A.
RatioResult ratio_search(std::span<const RatioItem> items, const AdditiveOptimizer& opt,
                         const RatioSearchOptions& options = {});

/// p-sum / q-sum of a selection (with multiplicity).
double selection_ratio(std::span<const RatioItem> items, std::span<const std::size_t> witness);

// ---------------------------------------------------------------------------
// Length-bounded walks.

struct WeightedArc {
  int from = 0;  // 1..n
  int to = 0;
  double weight = 0.0;
  int length = 1;  // > 0
};

struct LengthBoundedInstance {
  int n = 0;
  std::vector<WeightedArc> arcs;
  int min_length = 0;  // L
  int max_length = 0;  // U
};

void validate_instance(const LengthBoundedInstance& inst);

struct Walk {
  double weight = 0.0;
  int start = 0;                 // first vertex (meaningful for empty walks too)
  std::vector<std::size_t> arcs; // 0-based arc indices in traversal order
  int length = 0;
};

/// Best walk (self-intersections allowed) with total length in [L, U].
/// nullopt when no length in the range is achievable.
std::optional<Walk> max_weight_path_bounded(const LengthBoundedInstance& inst);

/// Best closed walk with total length in [max(L,1), U], over all start vertices.
std::optional<Walk> max_weight_cycle_bounded(const LengthBoundedInstance& inst);

struct PlusInfinity {};

struct UnboundedWeights {
  double path_weight = 0.0;
  double cycle_weight = 0.0;
};

/// Without length bounds: +infinity when a positive cycle exists, otherwise
/// the best path weight (empty path allowed) and a cycle weight of 0.
std::variant<PlusInfinity, UnboundedWeights> unbounded_max_weight(int n,
                                                                 std::span<const WeightedArc> arcs);

struct Segment {
  double sum = 0.0;
  std::size_t first = 0;  // 1-based, inclusive; 0 for the empty segment
  std::size_t last = 0;

  bool empty() const { return first == 0; }
};

struct LengthRange {
  std::size_t min_length = 1;
  std::size_t max_length = 1;
};

/// Max-sum contiguous segment. Unbounded: the empty segment (sum 0) is
/// allowed. Bounded: segment length must lie in the given range.
Segment max_sum_segment(std::span<const double> seq, std::optional<LengthRange> bounds = {});

// ---------------------------------------------------------------------------
// Optimizers that plug the solvers above into ratio_search.

/// Exactly one item.
class SingleItemOptimizer final : public AdditiveOptimizer {
 public:
  explicit SingleItemOptimizer(std::size_t count) : count_(count) {}
  std::size_t item_count() const override { return count_; }
  std::optional<Selection> maximize(std::span<const double> weights) const override;

 private:
  std::size_t count_;
};

/// Any non-empty subset.
class NonEmptySubsetOptimizer final : public AdditiveOptimizer {
 public:
  explicit NonEmptySubsetOptimizer(std::size_t count) : count_(count) {}
  std::size_t item_count() const override { return count_; }
  std::optional<Selection> maximize(std::span<const double> weights) const override;

 private:
  std::size_t count_;
};

/// Enumerates every subset accepted by a predicate (small item counts only).
class ExhaustiveOptimizer final : public AdditiveOptimizer {
 public:
  using Predicate = bool (*)(std::span<const std::size_t> subset, std::size_t item_count);
  ExhaustiveOptimizer(std::size_t count, Predicate accept);
  std::size_t item_count() const override { return count_; }
  std::optional<Selection> maximize(std::span<const double> weights) const override;

 private:
  std::size_t count_;
  Predicate accept_;
};

/// Items are the arcs of `shape`; the arc weights are replaced per call.
/// Requires L >= 1 so that the empty walk is never a candidate.
class BoundedPathOptimizer final : public AdditiveOptimizer {
 public:
  explicit BoundedPathOptimizer(LengthBoundedInstance shape);
  std::size_t item_count() const override { return shape_.arcs.size(); }
  std::optional<Selection> maximize(std::span<const double> weights) const override;

 private:
  LengthBoundedInstance shape_;
};

class BoundedCycleOptimizer final : public AdditiveOptimizer {
 public:
  explicit BoundedCycleOptimizer(LengthBoundedInstance shape);
  std::size_t item_count() const override { return shape_.arcs.size(); }
  std::optional<Selection> maximize(std::span<const double> weights) const override;

 private:
  LengthBoundedInstance shape_;
};

/// Items form a sequence; selections are contiguous, non-empty segments with
/// length in the given range.
class SegmentOptimizer final : public AdditiveOptimizer {
 public:
  SegmentOptimizer(std::size_t count, LengthRange bounds);
  std::size_t item_count() const override { return count_; }
  std::optional<Selection> maximize(std::span<const double> weights) const override;

 private:
  std::size_t count_;
  LengthRange bounds_;
};

}  // namespace resproc::ratio
