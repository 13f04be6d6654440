#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace resproc {

using Cost = std::int64_t;

/// Input violates a documented precondition (bad ids, inconsistent values).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force routine or a script materialization would exceed its size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// No feasible solution exists where the caller required one.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// +infinity sentinel for non-negative DP costs. Chosen far below the int64
// limit so that adding two finite costs never wraps.
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max() / 4;

constexpr bool is_infinite(Cost c) { return c >= kInfiniteCost; }

constexpr Cost add_cost(Cost a, Cost b) {
  if (is_infinite(a) || is_infinite(b)) return kInfiniteCost;
  return a + b;
}

}  // namespace detail

}  // namespace resproc
