#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "resproc/disjoint_set.hpp"
#include "resproc/toggle.hpp"

namespace resproc::toggle {
namespace {

using detail::add_cost;
using detail::is_infinite;
using detail::kInfiniteCost;

std::vector<std::vector<int>> adjacency(const ToggleInstance& inst) {
  std::vector<std::vector<int>> adj(inst.p + 1);
  for (const auto& [u, v] : inst.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// cmin[state][sel] for one vertex.
using Table = std::array<std::array<Cost, 2>, 2>;

struct SonSummary {
  Cost sum = 0;
  int num_sel = 0;
  Cost dif_min = kInfiniteCost;
  int dif_son = 0;
};

SonSummary summarize(const std::vector<int>& sons, const std::vector<Table>& cmin,
                     const std::vector<int>& target, int k) {
  SonSummary s;
  for (int son : sons) {
    const int t = (target[son - 1] + k) % 2;
    const Cost off = cmin[son][t][0];
    const Cost on = cmin[son][t][1];
    s.sum = add_cost(s.sum, std::min(off, on));
    if (on <= off) ++s.num_sel;
    const Cost dif = is_infinite(off) || is_infinite(on) ? kInfiniteCost : (on > off ? on - off : off - on);
    if (dif < s.dif_min) {
      s.dif_min = dif;
      s.dif_son = son;
    }
  }
  return s;
}

}  // namespace

void validate_instance(const ToggleInstance& inst) {
  if (inst.p < 0) throw ValidationError("vertex count must be non-negative");
  const auto p = static_cast<std::size_t>(inst.p);
  if (inst.initial.size() != p || inst.target.size() != p || inst.cost.size() != p) {
    throw ValidationError("I, F and C must each have p = " + std::to_string(inst.p) + " entries");
  }
  for (int u = 1; u <= inst.p; ++u) {
    auto fail = [u](const char* what) { throw ValidationError("vertex " + std::to_string(u) + ": " + what); };
    if (inst.initial[u - 1] != 0 && inst.initial[u - 1] != 1) fail("I must be 0 or 1");
    if (inst.target[u - 1] != 0 && inst.target[u - 1] != 1) fail("F must be 0 or 1");
    if (inst.cost[u - 1] < 0) fail("cost must be non-negative");
  }
  Cost total = 0;
  for (Cost c : inst.cost) {
    total += c;
    if (total >= kInfiniteCost) throw ValidationError("total cost too large");
  }
  auto edge_error = [](int u, int v, const char* what) {
    return ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + "): " + what);
  };
  std::vector<std::pair<int, int>> seen;
  seen.reserve(inst.edges.size());
  for (const auto& [u, v] : inst.edges) {
    if (u < 1 || u > inst.p || v < 1 || v > inst.p) throw edge_error(u, v, "endpoint out of range");
    if (u == v) throw edge_error(u, v, "self-loop");
    seen.push_back(std::minmax(u, v));
  }
  std::sort(seen.begin(), seen.end());
  if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
    for (const auto& [u, v] : inst.edges) {
      if (std::pair<int, int>(std::minmax(u, v)) == *dup) throw edge_error(u, v, "duplicate edge");
    }
  }
}

std::vector<int> apply_selection(const ToggleInstance& inst, const std::vector<int>& selection) {
  std::vector<int> state = inst.initial;
  const auto adj = adjacency(inst);
  for (int u : selection) {
    state[u - 1] ^= 1;
    for (int v : adj[u]) state[v - 1] ^= 1;
  }
  return state;
}

Cost selection_cost(const ToggleInstance& inst, const std::vector<int>& selection) {
  Cost total = 0;
  for (int u : selection) total += inst.cost[u - 1];
  return total;
}

ToggleResult toggle_tree_min_cost(const ToggleInstance& inst) {
  validate_instance(inst);
  const int p = inst.p;
  sets::DisjointSet dsu(p);
  for (const auto& [u, v] : inst.edges) {
    if (!dsu.unite(u, v)) throw ValidationError("graph is not a forest");
  }
  const auto adj = adjacency(inst);

  std::vector<Table> cmin(p + 1);
  std::vector<std::vector<int>> sons(p + 1);
  std::vector<int> parent(p + 1, -1);
  std::vector<int> roots;
  std::vector<int> order;
  order.reserve(p);
  for (int r = 1; r <= p; ++r) {
    if (parent[r] != -1) continue;
    roots.push_back(r);
    parent[r] = 0;
    const std::size_t first = order.size();
    order.push_back(r);
    for (std::size_t head = first; head < order.size(); ++head) {
      const int u = order[head];
      for (int v : adj[u]) {
        if (parent[v] != -1) continue;
        parent[v] = u;
        sons[u].push_back(v);
        order.push_back(v);
      }
    }
  }

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int u = *it;
    const int iu = inst.initial[u - 1];
    Table t{{{kInfiniteCost, kInfiniteCost}, {kInfiniteCost, kInfiniteCost}}};
    const SonSummary s0 = summarize(sons[u], cmin, inst.target, 0);
    const SonSummary s1 = summarize(sons[u], cmin, inst.target, 1);
    t[(iu + s0.num_sel) % 2][0] = s0.sum;
    t[(iu + s0.num_sel + 1) % 2][0] = add_cost(s0.sum, s0.dif_min);
    t[(iu + s1.num_sel + 1) % 2][1] = add_cost(s1.sum, inst.cost[u - 1]);
    t[(iu + s1.num_sel) % 2][1] = add_cost(add_cost(s1.sum, s1.dif_min), inst.cost[u - 1]);
    cmin[u] = t;
  }

  ToggleResult result;
  Cost total = 0;
  std::vector<std::pair<int, std::pair<int, int>>> stack;  // vertex, (state, sel)
  for (int r : roots) {
    const int f = inst.target[r - 1];
    const int sel = cmin[r][f][1] < cmin[r][f][0] ? 1 : 0;
    if (is_infinite(cmin[r][f][sel])) return ToggleResult{};
    total += cmin[r][f][sel];
    stack.push_back({r, {f, sel}});
  }

  while (!stack.empty()) {
    const auto [u, choice] = stack.back();
    const auto [state, sel] = choice;
    stack.pop_back();
    if (sel) result.selection.push_back(u);
    const SonSummary s = summarize(sons[u], cmin, inst.target, sel);
    const int base = (inst.initial[u - 1] + s.num_sel + sel) % 2;
    const int flip = base == state ? 0 : s.dif_son;
    for (int son : sons[u]) {
      const int t = (inst.target[son - 1] + sel) % 2;
      int son_sel = cmin[son][t][1] <= cmin[son][t][0] ? 1 : 0;
      if (son == flip) son_sel ^= 1;
      stack.push_back({son, {t, son_sel}});
    }
  }
  std::sort(result.selection.begin(), result.selection.end());
  result.min_cost = total;
  return result;
}

ToggleResult toggle_brute_force(const ToggleInstance& inst) {
  validate_instance(inst);
  const int p = inst.p;
  if (p > kMaxBruteForceVertices) {
    throw CapacityError("brute-force toggling supports at most " + std::to_string(kMaxBruteForceVertices) +
                        " vertices");
  }
  std::vector<std::uint32_t> flips(p, 0);
  std::uint32_t goal = 0;
  for (int u = 0; u < p; ++u) {
    flips[u] |= 1u << u;
    if (inst.initial[u] != inst.target[u]) goal |= 1u << u;
  }
  for (const auto& [u, v] : inst.edges) {
    flips[u - 1] |= 1u << (v - 1);
    flips[v - 1] |= 1u << (u - 1);
  }

  std::optional<Cost> best;
  std::uint32_t best_mask = 0;
  std::uint32_t state = 0;
  std::uint32_t mask = 0;
  Cost cost = 0;
  const std::uint64_t total = std::uint64_t{1} << p;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) {
      const int bit = std::countr_zero(i);
      mask ^= 1u << bit;
      state ^= flips[bit];
      cost += (mask >> bit & 1u) ? inst.cost[bit] : -inst.cost[bit];
    }
    if (state == goal && (!best || cost < *best || (cost == *best && mask < best_mask))) {
      best = cost;
      best_mask = mask;
    }
  }

  ToggleResult result;
  if (!best) return result;
  result.min_cost = best;
  for (int u = 0; u < p; ++u) {
    if (best_mask >> u & 1u) result.selection.push_back(u + 1);
  }
  return result;
}

}  // namespace resproc::toggle
