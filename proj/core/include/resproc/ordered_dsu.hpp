#pragma once

// Union-find whose sets are rows: a union glues one whole row to the left or
// right of another, and a query aggregates the weights strictly to the left
// of an element within its row.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "resproc/aggregation.hpp"

namespace resproc::sets {

enum class Side : std::uint8_t { kLeft, kRight };

enum class DsuVariant : std::uint8_t {
  /// Requires an inverse. Union by size + path compression; each node keeps
  /// an offset wp so that the prefix of x is the aggregate of wp over x's
  /// ancestor chain, root included.
  kInvertible,
  /// Any commutative aggregation. The left row always becomes the root and
  /// each tree edge carries the aggregate of everything left of the child's
  /// subtree (wskip); only path compression is used.
  kCommutative,
};

struct DsuOptions {
  bool path_compression = true;
  bool union_by_size = true;  // invertible variant only
};

class OrderedDsu {
 public:
  /// weights[x-1] is the weight of element x.
  OrderedDsu(std::span<const Value> weights, Aggregation agg, DsuVariant variant,
             DsuOptions options = {});

  int size() const { return static_cast<int>(parent_.size()) - 1; }
  DsuVariant variant() const { return variant_; }

  int find(int x);

  /// d == kLeft puts x's row to the left of y's row. Same-set unions are
  /// no-ops. Returns the root of the merged set.
  int unite(int x, int y, Side d);

  /// Aggregate of the weights strictly left of x in its row (neutral when x
  /// is leftmost).
  Value prefix(int x);

  /// Aggregate of all weights in x's row.
  Value row_total(int x);

  /// Height of the tree containing x (a single node has height 1). Walks
  /// parent pointers without compressing.
  int tree_height(int x) const;

  /// Parent pointers followed by find/prefix so far.
  std::uint64_t pointer_steps() const { return pointer_steps_; }

 private:
  int climb(int x, std::vector<int>& path);
  void compress(std::span<const int> path, int root);

  Aggregation agg_;
  DsuVariant variant_;
  DsuOptions options_;
  std::vector<int> parent_;  // parent_[root] == root
  std::vector<int> size_;
  std::vector<Value> offset_;  // wp (invertible) or wskip (commutative)
  std::vector<Value> total_;   // wagg, valid at roots
  std::vector<int> scratch_;
  std::uint64_t pointer_steps_ = 0;
};

struct UnionOp {
  int x = 0;
  int y = 0;
  Side side = Side::kLeft;
};

struct QueryOp {
  int x = 0;
};

using SetOp = std::variant<UnionOp, QueryOp>;

void validate_ops(int n, std::span<const SetOp> ops);

/// Replays a script on an online structure; one answer per query.
std::vector<Value> run_online(std::span<const Value> weights, const Aggregation& agg,
                              DsuVariant variant, std::span<const SetOp> ops,
                              DsuOptions options = {});

/// Final row layout computed from the unions alone.
struct OfflineRow {
  std::vector<int> order;     // order[i-1] = element at linear position i
  std::vector<int> position;  // position[x] = linear position of x (1-based)
};

OfflineRow linearize_unions(int n, std::span<const SetOp> ops);

/// Two-pass offline solver: lays out the final rows, builds a range structure
/// over them, then replays the script answering each query as a range.
std::vector<Value> solve_offline(std::span<const Value> weights, const Aggregation& agg,
                                 std::span<const SetOp> ops);

}  // namespace resproc::sets
