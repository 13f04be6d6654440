#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace resproc::sets {

/// Plain union-find over 1..n with union by size and path halving.
class DisjointSet {
 public:
  explicit DisjointSet(int n = 0) : parent_(n + 1), size_(n + 1, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int size() const { return static_cast<int>(parent_.size()) - 1; }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false when x and y were already together.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  int set_size(int x) { return size_[find(x)]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace resproc::sets
