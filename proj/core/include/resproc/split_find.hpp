#pragma once

// Interval partition of 1..n with colored splits and exact undo, every
// operation O(1) worst case on plain arrays.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "resproc/common.hpp"

namespace resproc::sets {

using Color = std::int64_t;

class SplitFindError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SplitFind {
 public:
  SplitFind(int n, Color initial);

  int size() const { return static_cast<int>(start_.size()) - 1; }

  /// Splits the interval starting at i into [i, k] (left color) and
  /// [k+1, j] (right color). Requires start(i) and i <= k < jj(i).
  void split(int i, int k, Color left, Color right);

  /// Rejoins the two intervals produced by the last split at k. The joined
  /// interval gets its pre-split color, or `recolor` when given.
  void undo(int k, std::optional<Color> recolor = std::nullopt);

  /// Undoes the split that ended the interval starting at i.
  void undo_at_start(int i, std::optional<Color> recolor = std::nullopt);

  /// Color of the interval starting at i; nullopt if no interval starts there.
  std::optional<Color> query(int i) const;

  /// End of the interval starting at i; requires start(i).
  int interval_end(int i) const;
  bool starts_interval(int i) const { return in_range(i) && start_[i] != 0; }

  /// Array cells read or written since construction.
  std::uint64_t cell_touches() const { return touches_; }

 private:
  bool in_range(int i) const { return i >= 1 && i <= size(); }

  template <class T>
  T read(const std::vector<T>& a, int i) const {
    ++touches_;
    return a[i];
  }
  template <class T>
  void write(std::vector<T>& a, int i, T v) {
    ++touches_;
    a[i] = v;
  }

  std::vector<std::uint8_t> start_;
  std::vector<Color> col_;
  std::vector<int> jj_;
  std::vector<int> isplit_;  // 0: no split recorded at this position
  std::vector<int> jsplit_;
  std::vector<Color> csplit_;
  mutable std::uint64_t touches_ = 0;
};

}  // namespace resproc::sets
