#pragma once

// Minimum-cost toggling: selecting a vertex flips the state of the vertex and
// of all its neighbours. Exact DPs on forests and on tree decompositions.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resproc/common.hpp"

namespace resproc::toggle {

struct ToggleInstance {
  int p = 0;                              // vertices 1..p
  std::vector<std::pair<int, int>> edges;
  std::vector<int> initial;               // I, size p, bits
  std::vector<int> target;                // F, size p, bits
  std::vector<Cost> cost;                 // C, size p, >= 0
};

/// Throws ValidationError on bad sizes, non-bit states, negative costs,
/// self-loops, duplicate edges or ids out of range.
void validate_instance(const ToggleInstance& inst);

struct ToggleResult {
  std::optional<Cost> min_cost;  // nullopt: infeasible
  std::vector<int> selection;    // ascending vertex ids

  bool feasible() const { return min_cost.has_value(); }
};

/// Final states after every selected vertex toggles once.
std::vector<int> apply_selection(const ToggleInstance& inst, const std::vector<int>& selection);

Cost selection_cost(const ToggleInstance& inst, const std::vector<int>& selection);

/// Forest DP; throws ValidationError if the graph has a cycle.
ToggleResult toggle_tree_min_cost(const ToggleInstance& inst);

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;          // node X = index + 1
  std::vector<std::pair<int, int>> tree_edges;  // 1-based node ids
  std::optional<int> width;                   // max bag size, if bounded
};

enum class ViolationKind : std::uint8_t {
  kInvalidVertex,
  kInvalidNode,
  kNotATree,
  kVertexNotCovered,
  kConnectivity,
  kEdgeNotCovered,
  kWidth,
};

struct Violation {
  ViolationKind kind;
  int vertex = 0;
  std::pair<int, int> edge{0, 0};
  int node = 0;
  std::string message;
};

const char* violation_kind_name(ViolationKind kind);

/// Every violated decomposition property; empty means valid.
std::vector<Violation> validate_decomposition(const ToggleInstance& inst, const TreeDecomposition& td);

inline constexpr int kMaxBagSize = 10;

/// DP over the decomposition rooted at node 1. Throws ValidationError if
/// the decomposition is invalid and CapacityError for bags above kMaxBagSize.
ToggleResult toggle_treewidth_min_cost(const ToggleInstance& inst, const TreeDecomposition& td);

inline constexpr int kMaxBruteForceVertices = 24;

/// Enumerates all 2^p selections in Gray-code order.
ToggleResult toggle_brute_force(const ToggleInstance& inst);

}  // namespace resproc::toggle
