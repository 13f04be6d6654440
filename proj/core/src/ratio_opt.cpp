#include "resproc/ratio_opt.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

namespace resproc::ratio {
namespace {

void check_weights(std::span<const double> weights, std::size_t expected) {
  if (weights.size() != expected) {
    throw ValidationError("weight vector has " + std::to_string(weights.size()) +
                          " entries, optimizer expects " + std::to_string(expected));
  }
}

LengthBoundedInstance with_weights(const LengthBoundedInstance& shape,
                                   std::span<const double> weights) {
  LengthBoundedInstance inst = shape;
  for (std::size_t i = 0; i < inst.arcs.size(); ++i) inst.arcs[i].weight = weights[i];
  return inst;
}

// DP table over (length, vertex) for walks ending at a vertex.
struct WalkTable {
  int n;
  int max_length;
  std::vector<double> weight;
  std::vector<char> reachable;
  std::vector<std::size_t> via;  // arc index used to reach the state

  WalkTable(int vertices, int max_len)
      : n(vertices),
        max_length(max_len),
        weight(static_cast<std::size_t>(max_len + 1) * (vertices + 1), 0.0),
        reachable(weight.size(), 0),
        via(weight.size(), 0) {}

  std::size_t at(int k, int v) const { return static_cast<std::size_t>(k) * (n + 1) + v; }
};

void fill_walk_table(const LengthBoundedInstance& inst, WalkTable& t) {
  for (int k = 1; k <= inst.max_length; ++k) {
    for (std::size_t a = 0; a < inst.arcs.size(); ++a) {
      const WeightedArc& arc = inst.arcs[a];
      if (arc.length > k) continue;
      const std::size_t src = t.at(k - arc.length, arc.from);
      if (!t.reachable[src]) continue;
      const double cand = t.weight[src] + arc.weight;
      const std::size_t dst = t.at(k, arc.to);
      if (!t.reachable[dst] || cand > t.weight[dst]) {
        t.reachable[dst] = 1;
        t.weight[dst] = cand;
        t.via[dst] = a;
      }
    }
  }
}

Walk trace_walk(const LengthBoundedInstance& inst, const WalkTable& t, int k, int v) {
  Walk walk;
  walk.weight = t.weight[t.at(k, v)];
  walk.length = k;
  while (k > 0) {
    const std::size_t a = t.via[t.at(k, v)];
    walk.arcs.push_back(a);
    k -= inst.arcs[a].length;
    v = inst.arcs[a].from;
  }
  walk.start = v;
  std::reverse(walk.arcs.begin(), walk.arcs.end());
  return walk;
}

}  // namespace

void validate_items(std::span<const RatioItem> items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!(items[i].p >= 0.0) || !std::isfinite(items[i].p)) {
      throw ValidationError("item " + std::to_string(i + 1) + ": p must be finite and >= 0");
    }
    if (!(items[i].q > 0.0) || !std::isfinite(items[i].q)) {
      throw ValidationError("item " + std::to_string(i + 1) + ": q must be finite and > 0");
    }
  }
}

double selection_ratio(std::span<const RatioItem> items, std::span<const std::size_t> witness) {
  double p = 0.0;
  double q = 0.0;
  for (std::size_t i : witness) {
    p += items[i].p;
    q += items[i].q;
  }
  return q > 0.0 ? p / q : 0.0;
}

RatioResult ratio_search(std::span<const RatioItem> items, const AdditiveOptimizer& opt,
                         const RatioSearchOptions& options) {
  validate_items(items);
  if (items.empty()) throw ValidationError("ratio search needs at least one item");
  if (opt.item_count() != items.size()) {
    throw ValidationError("optimizer item count does not match the instance");
  }
  if (!(options.relative_eps > 0.0)) throw ValidationError("eps must be positive");

  const double sign = options.objective == Objective::kMaximize ? 1.0 : -1.0;
  double max_p = 0.0;
  double min_q = items.front().q;
  for (const RatioItem& it : items) {
    max_p = std::max(max_p, it.p);
    min_q = std::min(min_q, it.q);
  }
  const double amax = max_p / min_q;
  const double eps = options.relative_eps * amax;

  // The signed ratio always lies in [lo, hi].
  double lo = sign > 0 ? 0.0 : -amax;
  double hi = sign > 0 ? amax : 0.0;

  std::vector<double> weights(items.size());
  std::vector<std::pair<double, double>> probes;  // (A, optimum at A)
  auto evaluate = [&](double a) {
    for (std::size_t i = 0; i < items.size(); ++i) weights[i] = sign * items[i].p - a * items[i].q;
    auto sel = opt.maximize(weights);
    if (!sel) throw InfeasibleError("optimizer reports no feasible selection");
    probes.emplace_back(a, sel->value);
    return std::move(*sel);
  };

  RatioResult result;
  result.witness = evaluate(lo).witness;
  while (hi - lo > eps && result.iterations < options.max_iterations) {
    const double mid = lo + (hi - lo) / 2;
    Selection sel = evaluate(mid);
    ++result.iterations;
    if (sel.value < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      result.witness = std::move(sel.witness);
    }
  }

  std::sort(probes.begin(), probes.end());
  for (std::size_t i = 1; i < probes.size(); ++i) {
    const double tol = 1e-9 * (1.0 + std::abs(probes[i - 1].second));
    if (probes[i].second > probes[i - 1].second + tol) {
      throw std::logic_error("additive optimizer is not monotone in the candidate ratio");
    }
  }

  result.ratio = selection_ratio(items, result.witness);
  return result;
}

void validate_instance(const LengthBoundedInstance& inst) {
  if (inst.n < 0) throw ValidationError("vertex count must be non-negative");
  if (inst.min_length < 0 || inst.min_length > inst.max_length) {
    throw ValidationError("length bounds must satisfy 0 <= L <= U");
  }
  for (std::size_t i = 0; i < inst.arcs.size(); ++i) {
    const WeightedArc& a = inst.arcs[i];
    if (a.from < 1 || a.from > inst.n || a.to < 1 || a.to > inst.n) {
      throw ValidationError("arc " + std::to_string(i + 1) + ": endpoint out of range");
    }
    if (a.length <= 0) throw ValidationError("arc " + std::to_string(i + 1) + ": length must be > 0");
  }
}

std::optional<Walk> max_weight_path_bounded(const LengthBoundedInstance& inst) {
  validate_instance(inst);
  WalkTable t(inst.n, inst.max_length);
  for (int v = 1; v <= inst.n; ++v) t.reachable[t.at(0, v)] = 1;
  fill_walk_table(inst, t);

  std::optional<std::pair<int, int>> best;
  for (int k = inst.min_length; k <= inst.max_length; ++k) {
    for (int v = 1; v <= inst.n; ++v) {
      const std::size_t idx = t.at(k, v);
      if (!t.reachable[idx]) continue;
      if (!best || t.weight[idx] > t.weight[t.at(best->first, best->second)]) best = {k, v};
    }
  }
  if (!best) return std::nullopt;
  return trace_walk(inst, t, best->first, best->second);
}

std::optional<Walk> max_weight_cycle_bounded(const LengthBoundedInstance& inst) {
  validate_instance(inst);
  std::optional<Walk> best;
  const int lower = std::max(inst.min_length, 1);
  for (int s = 1; s <= inst.n; ++s) {
    WalkTable t(inst.n, inst.max_length);
    t.reachable[t.at(0, s)] = 1;
    fill_walk_table(inst, t);
    for (int k = lower; k <= inst.max_length; ++k) {
      const std::size_t idx = t.at(k, s);
      if (!t.reachable[idx]) continue;
      if (!best || t.weight[idx] > best->weight) best = trace_walk(inst, t, k, s);
    }
  }
  return best;
}

std::variant<PlusInfinity, UnboundedWeights> unbounded_max_weight(
    int n, std::span<const WeightedArc> arcs) {
  if (n < 0) throw ValidationError("vertex count must be non-negative");
  std::vector<std::vector<const WeightedArc*>> out(n + 1);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const WeightedArc& a = arcs[i];
    if (a.from < 1 || a.from > n || a.to < 1 || a.to > n) {
      throw ValidationError("arc " + std::to_string(i + 1) + ": endpoint out of range");
    }
    out[a.from].push_back(&a);
  }

  std::vector<double> best(n + 1, 0.0);
  std::vector<char> queued(n + 1, 1);
  std::vector<int> inserted(n + 1, 1);
  std::deque<int> queue;
  for (int v = 1; v <= n; ++v) queue.push_back(v);

  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    queued[i] = 0;
    for (const WeightedArc* a : out[i]) {
      const double cand = best[i] + a->weight;
      if (cand <= best[a->to]) continue;
      best[a->to] = cand;
      if (queued[a->to]) continue;
      if (++inserted[a->to] > n) return PlusInfinity{};
      queued[a->to] = 1;
      queue.push_back(a->to);
    }
  }

  UnboundedWeights w;
  for (int v = 1; v <= n; ++v) w.path_weight = std::max(w.path_weight, best[v]);
  return w;
}

Segment max_sum_segment(std::span<const double> seq, std::optional<LengthRange> bounds) {
  if (seq.empty()) throw ValidationError("sequence must be non-empty");
  const std::size_t n = seq.size();
  Segment best;

  if (!bounds) {
    double run = 0.0;
    std::size_t run_start = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      if (run <= 0.0) {
        run = seq[i - 1];
        run_start = i;
      } else {
        run += seq[i - 1];
      }
      if (run > best.sum) best = {run, run_start, i};
    }
    return best;
  }

  const auto [lmin, lmax] = *bounds;
  if (lmin < 1 || lmin > lmax || lmax > n) {
    throw ValidationError("segment length bounds must satisfy 1 <= Lmin <= Lmax <= n");
  }
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + seq[i];

  std::deque<std::size_t> window;  // candidate start offsets, increasing prefix values
  bool found = false;
  for (std::size_t j = lmin; j <= n; ++j) {
    const std::size_t entering = j - lmin;
    while (!window.empty() && prefix[window.back()] >= prefix[entering]) window.pop_back();
    window.push_back(entering);
    while (window.front() + lmax < j) window.pop_front();
    const double cand = prefix[j] - prefix[window.front()];
    if (!found || cand > best.sum) {
      best = {cand, window.front() + 1, j};
      found = true;
    }
  }
  return best;
}

std::optional<Selection> SingleItemOptimizer::maximize(std::span<const double> weights) const {
  check_weights(weights, count_);
  if (count_ == 0) return std::nullopt;
  const auto it = std::max_element(weights.begin(), weights.end());
  const auto idx = static_cast<std::size_t>(it - weights.begin());
  return Selection{*it, {idx}};
}

std::optional<Selection> NonEmptySubsetOptimizer::maximize(std::span<const double> weights) const {
  check_weights(weights, count_);
  if (count_ == 0) return std::nullopt;
  Selection sel;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0.0) {
      sel.value += weights[i];
      sel.witness.push_back(i);
    }
  }
  if (sel.witness.empty()) {
    const auto it = std::max_element(weights.begin(), weights.end());
    sel.value = *it;
    sel.witness.push_back(static_cast<std::size_t>(it - weights.begin()));
  }
  return sel;
}

ExhaustiveOptimizer::ExhaustiveOptimizer(std::size_t count, Predicate accept)
    : count_(count), accept_(accept) {
  if (count_ > 24) throw CapacityError("exhaustive optimizer supports at most 24 items");
}

std::optional<Selection> ExhaustiveOptimizer::maximize(std::span<const double> weights) const {
  check_weights(weights, count_);
  std::optional<Selection> best;
  std::vector<std::size_t> subset;
  for (std::uint32_t mask = 1; mask < (1u << count_); ++mask) {
    subset.clear();
    double sum = 0.0;
    for (std::size_t i = 0; i < count_; ++i) {
      if (mask & (1u << i)) {
        subset.push_back(i);
        sum += weights[i];
      }
    }
    if (!accept_(subset, count_)) continue;
    if (!best || sum > best->value) best = Selection{sum, subset};
  }
  return best;
}

BoundedPathOptimizer::BoundedPathOptimizer(LengthBoundedInstance shape) : shape_(std::move(shape)) {
  validate_instance(shape_);
  if (shape_.min_length < 1) throw ValidationError("ratio over walks requires L >= 1");
}

std::optional<Selection> BoundedPathOptimizer::maximize(std::span<const double> weights) const {
  check_weights(weights, shape_.arcs.size());
  auto walk = max_weight_path_bounded(with_weights(shape_, weights));
  if (!walk) return std::nullopt;
  return Selection{walk->weight, std::move(walk->arcs)};
}

BoundedCycleOptimizer::BoundedCycleOptimizer(LengthBoundedInstance shape)
    : shape_(std::move(shape)) {
  validate_instance(shape_);
}

std::optional<Selection> BoundedCycleOptimizer::maximize(std::span<const double> weights) const {
  check_weights(weights, shape_.arcs.size());
  auto walk = max_weight_cycle_bounded(with_weights(shape_, weights));
  if (!walk) return std::nullopt;
  return Selection{walk->weight, std::move(walk->arcs)};
}

SegmentOptimizer::SegmentOptimizer(std::size_t count, LengthRange bounds)
    : count_(count), bounds_(bounds) {
  if (bounds_.min_length < 1 || bounds_.min_length > bounds_.max_length ||
      bounds_.max_length > count_) {
    throw ValidationError("segment length bounds must satisfy 1 <= Lmin <= Lmax <= n");
  }
}

std::optional<Selection> SegmentOptimizer::maximize(std::span<const double> weights) const {
  check_weights(weights, count_);
  const Segment seg = max_sum_segment(weights, bounds_);
  Selection sel{seg.sum, {}};
  for (std::size_t i = seg.first; i <= seg.last; ++i) sel.witness.push_back(i - 1);
  return sel;
}

}  // namespace resproc::ratio
