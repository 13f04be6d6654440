#include "resproc/ordered_dsu.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "resproc/common.hpp"
#include "resproc/disjoint_set.hpp"

namespace resproc::sets {

OrderedDsu::OrderedDsu(std::span<const Value> weights, Aggregation agg, DsuVariant variant,
                       DsuOptions options)
    : agg_(std::move(agg)),
      variant_(variant),
      options_(options),
      parent_(weights.size() + 1),
      size_(weights.size() + 1, 1),
      offset_(weights.size() + 1, agg_.neutral),
      total_(weights.size() + 1, agg_.neutral) {
  if (variant_ == DsuVariant::kInvertible && !agg_.invertible()) {
    throw ValidationError("aggregation '" + agg_.name + "' has no inverse");
  }
  for (std::size_t x = 0; x < parent_.size(); ++x) parent_[x] = static_cast<int>(x);
  for (std::size_t x = 1; x < parent_.size(); ++x) total_[x] = weights[x - 1];
}

int OrderedDsu::climb(int x, std::vector<int>& path) {
  path.clear();
  while (parent_[x] != x) {
    path.push_back(x);
    x = parent_[x];
    ++pointer_steps_;
  }
  return x;
}

// Both variants store, per node, the aggregate that must be added when moving
// to the parent, so re-pointing a node at the root means folding the chain
// above it.
void OrderedDsu::compress(std::span<const int> path, int root) {
  Value acc = agg_.neutral;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    acc = agg_(offset_[*it], acc);
    offset_[*it] = acc;
    parent_[*it] = root;
  }
}

int OrderedDsu::find(int x) {
  const int root = climb(x, scratch_);
  if (options_.path_compression) compress(scratch_, root);
  return root;
}

Value OrderedDsu::prefix(int x) {
  const int root = climb(x, scratch_);
  Value acc = offset_[root];
  for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) acc = agg_(offset_[*it], acc);
  if (options_.path_compression) compress(scratch_, root);
  return acc;
}

Value OrderedDsu::row_total(int x) { return total_[find(x)]; }

int OrderedDsu::unite(int x, int y, Side d) {
  const int rx = find(x);
  const int ry = find(y);
  if (rx == ry) return rx;

  if (variant_ == DsuVariant::kCommutative) {
    const int left = d == Side::kLeft ? rx : ry;
    const int right = d == Side::kLeft ? ry : rx;
    parent_[right] = left;
    offset_[right] = total_[left];
    total_[left] = agg_(total_[left], total_[right]);
    size_[left] += size_[right];
    return left;
  }

  const auto& inv = *agg_.inverse;
  const bool rx_below = !options_.union_by_size || size_[rx] <= size_[ry];
  if (d == Side::kLeft) {
    if (rx_below) {
      offset_[ry] = agg_(offset_[ry], total_[rx]);
      offset_[rx] = agg_(offset_[rx], inv(offset_[ry]));
    } else {
      offset_[ry] = agg_(agg_(offset_[ry], total_[rx]), inv(offset_[rx]));
    }
  } else {
    if (rx_below) {
      offset_[rx] = agg_(agg_(offset_[rx], total_[ry]), inv(offset_[ry]));
    } else {
      offset_[rx] = agg_(offset_[rx], total_[ry]);
      offset_[ry] = agg_(offset_[ry], inv(offset_[rx]));
    }
  }

  const int child = rx_below ? rx : ry;
  const int root = rx_below ? ry : rx;
  parent_[child] = root;
  total_[root] = agg_(total_[root], total_[child]);
  size_[root] += size_[child];
  return root;
}

int OrderedDsu::tree_height(int x) const {
  auto root_of = [this](int v) {
    while (parent_[v] != v) v = parent_[v];
    return v;
  };
  const int root = root_of(x);
  int height = 0;
  for (int v = 1; v <= size(); ++v) {
    int depth = 1;
    int u = v;
    while (parent_[u] != u) {
      u = parent_[u];
      ++depth;
    }
    if (u == root) height = std::max(height, depth);
  }
  return height;
}

void validate_ops(int n, std::span<const SetOp> ops) {
  auto check = [n](int id, std::size_t line) {
    if (id < 1 || id > n) {
      throw ValidationError("op " + std::to_string(line + 1) + ": element " + std::to_string(id) +
                            " out of range 1.." + std::to_string(n));
    }
  };
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (const auto* u = std::get_if<UnionOp>(&ops[i])) {
      check(u->x, i);
      check(u->y, i);
    } else {
      check(std::get<QueryOp>(ops[i]).x, i);
    }
  }
}

std::vector<Value> run_online(std::span<const Value> weights, const Aggregation& agg,
                              DsuVariant variant, std::span<const SetOp> ops,
                              DsuOptions options) {
  validate_ops(static_cast<int>(weights.size()), ops);
  OrderedDsu dsu(weights, agg, variant, options);
  std::vector<Value> answers;
  for (const SetOp& op : ops) {
    if (const auto* u = std::get_if<UnionOp>(&op)) {
      dsu.unite(u->x, u->y, u->side);
    } else {
      answers.push_back(dsu.prefix(std::get<QueryOp>(op).x));
    }
  }
  return answers;
}

namespace {

// Row endpoints per set, tracked through the same union sequence twice.
class RowTracker {
 public:
  explicit RowTracker(int n) : sets_(n), leftmost_(n + 1), rightmost_(n + 1) {
    for (int x = 0; x <= n; ++x) leftmost_[x] = rightmost_[x] = x;
  }

  /// Returns the (from, to) chain edge created by the union, or {0, 0} for a
  /// same-set union.
  std::pair<int, int> unite(const UnionOp& op) {
    const int rx = sets_.find(op.x);
    const int ry = sets_.find(op.y);
    if (rx == ry) return {0, 0};
    const int left = op.side == Side::kLeft ? rx : ry;
    const int right = op.side == Side::kLeft ? ry : rx;
    const std::pair<int, int> edge{rightmost_[left], leftmost_[right]};
    const int lm = leftmost_[left];
    const int rm = rightmost_[right];
    sets_.unite(rx, ry);
    const int root = sets_.find(rx);
    leftmost_[root] = lm;
    rightmost_[root] = rm;
    return edge;
  }

  int leftmost_of(int x) { return leftmost_[sets_.find(x)]; }

 private:
  DisjointSet sets_;
  std::vector<int> leftmost_;
  std::vector<int> rightmost_;
};

// Range aggregate over a fixed array, positions 1..n.
class RangeAggregator {
 public:
  RangeAggregator(std::vector<Value> values, const Aggregation& agg) : agg_(agg) {
    const std::size_t n = values.size();
    if (agg.invertible()) {
      mode_ = Mode::kPrefix;
      table_.assign(n + 1, agg.neutral);
      for (std::size_t i = 0; i < n; ++i) table_[i + 1] = agg(table_[i], values[i]);
    } else if (agg.idempotent) {
      mode_ = Mode::kSparse;
      levels_ = n == 0 ? 1 : std::bit_width(n);
      width_ = n;
      table_.assign(levels_ * n, agg.neutral);
      std::copy(values.begin(), values.end(), table_.begin());
      for (std::size_t k = 1; k < levels_; ++k) {
        const std::size_t half = std::size_t{1} << (k - 1);
        for (std::size_t i = 0; i + (std::size_t{1} << k) <= n; ++i) {
          table_[k * n + i] = agg(table_[(k - 1) * n + i], table_[(k - 1) * n + i + half]);
        }
      }
    } else {
      mode_ = Mode::kSegment;
      width_ = std::bit_ceil(std::max<std::size_t>(n, 1));
      table_.assign(2 * width_, agg.neutral);
      std::copy(values.begin(), values.end(), table_.begin() + width_);
      for (std::size_t i = width_ - 1; i >= 1; --i) table_[i] = agg(table_[2 * i], table_[2 * i + 1]);
    }
  }

  /// Aggregate over positions lo..hi (1-based, inclusive); neutral if empty.
  Value query(std::size_t lo, std::size_t hi) const {
    if (lo > hi) return agg_.neutral;
    switch (mode_) {
      case Mode::kPrefix:
        return agg_(table_[hi], (*agg_.inverse)(table_[lo - 1]));
      case Mode::kSparse: {
        const std::size_t len = hi - lo + 1;
        const std::size_t k = std::bit_width(len) - 1;
        return agg_(table_[k * width_ + lo - 1], table_[k * width_ + hi - (std::size_t{1} << k)]);
      }
      case Mode::kSegment: {
        Value left = agg_.neutral;
        Value right = agg_.neutral;
        std::size_t l = lo - 1 + width_;
        std::size_t r = hi + width_;  // half-open
        while (l < r) {
          if (l & 1) left = agg_(left, table_[l++]);
          if (r & 1) right = agg_(table_[--r], right);
          l >>= 1;
          r >>= 1;
        }
        return agg_(left, right);
      }
    }
    return agg_.neutral;
  }

 private:
  enum class Mode { kPrefix, kSparse, kSegment };
  const Aggregation& agg_;
  Mode mode_ = Mode::kPrefix;
  std::size_t levels_ = 0;
  std::size_t width_ = 0;
  std::vector<Value> table_;
};

}  // namespace

OfflineRow linearize_unions(int n, std::span<const SetOp> ops) {
  validate_ops(n, ops);
  RowTracker rows(n);
  std::vector<int> next(n + 1, 0);
  std::vector<char> has_incoming(n + 1, 0);
  for (const SetOp& op : ops) {
    const auto* u = std::get_if<UnionOp>(&op);
    if (!u) continue;
    const auto [from, to] = rows.unite(*u);
    if (from == 0) continue;
    next[from] = to;
    has_incoming[to] = 1;
  }

  OfflineRow row;
  row.order.reserve(n);
  row.position.assign(n + 1, 0);
  for (int head = 1; head <= n; ++head) {
    if (has_incoming[head]) continue;
    for (int x = head; x != 0; x = next[x]) {
      row.order.push_back(x);
      row.position[x] = static_cast<int>(row.order.size());
    }
  }
  return row;
}

std::vector<Value> solve_offline(std::span<const Value> weights, const Aggregation& agg,
                                 std::span<const SetOp> ops) {
  const int n = static_cast<int>(weights.size());
  const OfflineRow row = linearize_unions(n, ops);

  std::vector<Value> laid_out(n);
  for (int i = 0; i < n; ++i) laid_out[i] = weights[row.order[i] - 1];
  const RangeAggregator ranges(std::move(laid_out), agg);

  RowTracker rows(n);
  std::vector<Value> answers;
  for (const SetOp& op : ops) {
    if (const auto* u = std::get_if<UnionOp>(&op)) {
      rows.unite(*u);
      continue;
    }
    const int x = std::get<QueryOp>(op).x;
    const auto lo = static_cast<std::size_t>(row.position[rows.leftmost_of(x)]);
    const auto hi = static_cast<std::size_t>(row.position[x]) - 1;
    answers.push_back(ranges.query(lo, hi));
  }
  return answers;
}

}  // namespace resproc::sets
