#include "resproc/split_find.hpp"

#include <string>

namespace resproc::sets {

SplitFind::SplitFind(int n, Color initial)
    : start_(n + 1, 0),
      col_(n + 1, 0),
      jj_(n + 1, 0),
      isplit_(n + 1, 0),
      jsplit_(n + 1, 0),
      csplit_(n + 1, 0) {
  if (n < 1) throw ValidationError("split-find needs n >= 1");
  start_[1] = 1;
  jj_[1] = n;
  col_[1] = initial;
}

void SplitFind::split(int i, int k, Color left, Color right) {
  if (!in_range(i) || !read(start_, i)) {
    throw SplitFindError("split: no interval starts at " + std::to_string(i));
  }
  const int j = read(jj_, i);
  if (k < i || k >= j) {
    throw SplitFindError("split: position " + std::to_string(k) + " outside [" +
                         std::to_string(i) + ", " + std::to_string(j - 1) + "]");
  }
  write(isplit_, k, i);
  write(jsplit_, k, j);
  write(csplit_, k, read(col_, i));
  write<std::uint8_t>(start_, k + 1, 1);
  write(col_, i, left);
  write(col_, k + 1, right);
  write(jj_, i, k);
  write(jj_, k + 1, j);
}

void SplitFind::undo(int k, std::optional<Color> recolor) {
  if (k < 1 || k >= size()) throw SplitFindError("undo: position out of range");
  const int i = read(isplit_, k);
  if (i == 0) throw SplitFindError("undo: no split recorded at " + std::to_string(k));
  if (!read(start_, k + 1) || !read(start_, i) || read(jj_, i) != k ||
      read(jj_, k + 1) != read(jsplit_, k)) {
    throw SplitFindError("undo: intervals produced by the split at " + std::to_string(k) +
                         " no longer exist");
  }
  write<std::uint8_t>(start_, k + 1, 0);
  write(col_, i, recolor ? *recolor : read(csplit_, k));
  write(jj_, i, read(jsplit_, k));
}

void SplitFind::undo_at_start(int i, std::optional<Color> recolor) {
  if (!in_range(i) || !read(start_, i)) {
    throw SplitFindError("undo: no interval starts at " + std::to_string(i));
  }
  undo(read(jj_, i), recolor);
}

std::optional<Color> SplitFind::query(int i) const {
  if (!in_range(i) || !read(start_, i)) return std::nullopt;
  return read(col_, i);
}

int SplitFind::interval_end(int i) const {
  if (!in_range(i) || !read(start_, i)) {
    throw SplitFindError("no interval starts at " + std::to_string(i));
  }
  return read(jj_, i);
}

}  // namespace resproc::sets
