#include "resproc/aggregation.hpp"

#include <algorithm>
#include <limits>

#include "resproc/common.hpp"

namespace resproc::sets {
namespace {

__extension__ using Wide = __int128;

Value mul_mod(Value a, Value b, Value m) {
  return static_cast<Value>((static_cast<Wide>(a) * b) % m);
}

Value pow_mod(Value base, Value exp, Value m) {
  Value result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

Aggregation sum_aggregation() {
  return {"sum", [](Value a, Value b) { return a + b; }, 0, [](Value a) { return -a; }, false};
}

Aggregation xor_aggregation() {
  return {"xor", [](Value a, Value b) { return a ^ b; }, 0, [](Value a) { return a; }, false};
}

Aggregation max_aggregation() {
  return {"max", [](Value a, Value b) { return std::max(a, b); },
          std::numeric_limits<Value>::min(), std::nullopt, true};
}

Aggregation min_aggregation() {
  return {"min", [](Value a, Value b) { return std::min(a, b); },
          std::numeric_limits<Value>::max(), std::nullopt, true};
}

Aggregation product_mod_aggregation(Value prime) {
  if (prime < 2) throw ValidationError("modulus must be a prime >= 2");
  return {"prod", [prime](Value a, Value b) { return mul_mod(a, b, prime); }, 1,
          [prime](Value a) { return pow_mod(a, prime - 2, prime); }, false};
}

std::optional<Aggregation> aggregation_by_name(std::string_view name) {
  if (name == "sum") return sum_aggregation();
  if (name == "xor") return xor_aggregation();
  if (name == "max") return max_aggregation();
  if (name == "min") return min_aggregation();
  if (name == "prod") return product_mod_aggregation(1'000'000'007);
  return std::nullopt;
}

}  // namespace resproc::sets
