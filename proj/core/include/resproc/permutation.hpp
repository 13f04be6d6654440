#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "resproc/common.hpp"

namespace resproc::perm {

/// A bijection on 1..n stored as p(1..n).
class Permutation {
 public:
  Permutation() = default;
  /// Throws ValidationError unless every value 1..n occurs exactly once.
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  /// 1-based access.
  int operator()(int i) const { return values_[i - 1]; }
  std::span<const int> values() const { return values_; }
  /// positions()[v] = i with p(i) = v; index 0 unused.
  std::vector<int> positions() const;
  bool is_identity() const;

 private:
  std::vector<int> values_;
};

/// A sequence over 1..k where every value occurs at least once.
class MultiPermutation {
 public:
  MultiPermutation() = default;
  explicit MultiPermutation(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  int distinct() const { return k_; }
  int operator()(int i) const { return values_[i - 1]; }
  std::span<const int> values() const { return values_; }
  /// Ascending 1-based positions of value v.
  std::span<const int> occurrences(int v) const { return occurrences_[v]; }
  std::vector<int> counts() const;  // counts[v], index 0 unused

 private:
  std::vector<int> values_;
  int k_ = 0;
  std::vector<std::vector<int>> occurrences_;
};

// ---------------------------------------------------------------------------
// Operation scripts. Positions are 1-based throughout.

enum class ScriptKind : std::uint8_t { kRotationV1, kRotationV2, kSwap, kAdjacentSwap, kMove };

/// Split-rotation. The array is cut around `split` into a left side and a
/// right side (case 1: [1, split] and [split+1, n]; case 2: [1, split-1] and
/// [split+1, n], leaving `split` in place). Shifts are signed, positive
/// meaning rightward, and each side rotates by its own shift.
struct RotationStep {
  int split = 0;
  std::int64_t left_shift = 0;
  std::int64_t right_shift = 0;
};

/// Reverses [1, position-1] and [position+1, n]; position in 0..n+1.
struct ReversalStep {
  int position = 0;
};

struct SwapStep {
  int i = 0;
  int j = 0;
};

/// Swaps positions i and i+1.
struct AdjacentSwapStep {
  int i = 0;
};

/// Removes the element at `from` and reinserts it so that it ends at `to`.
struct MoveStep {
  int from = 0;
  int to = 0;
};

using ScriptStep = std::variant<RotationStep, ReversalStep, SwapStep, AdjacentSwapStep, MoveStep>;

struct OpScript {
  ScriptKind kind = ScriptKind::kSwap;
  int rotation_case = 1;  // only meaningful for kRotationV1
  std::vector<ScriptStep> steps;

  /// Elementary operations the script stands for: a compressed rotation
  /// counts once per unit of shift.
  std::int64_t elementary_operations() const;
};

inline constexpr std::size_t kMaxScriptSteps = 10'000'000;

/// Applies every step in order. Throws ValidationError on a step that does
/// not match the script kind or addresses positions out of range.
std::vector<int> apply_script(std::vector<int> arrangement, const OpScript& script);

const char* script_kind_name(ScriptKind kind);

}  // namespace resproc::perm
