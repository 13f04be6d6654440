#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace resproc::sets {

using Value = std::int64_t;

/// An associative, commutative combine with a neutral element. `inverse`
/// is present for group operations (+, xor, product modulo a prime);
/// `idempotent` marks operations like min/max whose ranges can be answered
/// from overlapping blocks.
struct Aggregation {
  std::string name;
  std::function<Value(Value, Value)> combine;
  Value neutral = 0;
  std::optional<std::function<Value(Value)>> inverse;
  bool idempotent = false;

  Value operator()(Value a, Value b) const { return combine(a, b); }
  bool invertible() const { return inverse.has_value(); }
};

Aggregation sum_aggregation();
Aggregation xor_aggregation();
Aggregation max_aggregation();
Aggregation min_aggregation();
/// Multiplication modulo a prime; weights are reduced into [1, prime).
Aggregation product_mod_aggregation(Value prime);

/// "sum", "xor", "max", "min", "prod" (modulo 1'000'000'007).
std::optional<Aggregation> aggregation_by_name(std::string_view name);

}  // namespace resproc::sets
