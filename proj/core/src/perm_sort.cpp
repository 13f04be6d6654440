#include "resproc/perm_sort.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace resproc::perm {
namespace {

// Same semantics as the interpreter's split-rotation, on a 0-based array.
void rotate_sides(std::vector<int>& a, int rotation_case, int split, std::int64_t count) {
  const int n = static_cast<int>(a.size());
  auto rot = [&a](int first, int last, std::int64_t shift) {
    const std::int64_t len = last - first;
    if (len <= 1) return;
    const std::int64_t s = ((shift % len) + len) % len;
    if (s != 0) std::rotate(a.begin() + first, a.begin() + (last - s), a.begin() + last);
  };
  if (rotation_case == 1) {
    rot(0, split, -count);
    rot(split, n, count);
  } else {
    rot(0, std::max(split - 1, 0), -count);
    rot(std::min(split, n), n, count);
  }
}

int position_of(const std::vector<int>& a, int v) {
  return static_cast<int>(std::find(a.begin(), a.end(), v) - a.begin()) + 1;
}

void check_script_size(std::size_t steps) {
  if (steps > kMaxScriptSteps) {
    throw CapacityError("script would exceed " + std::to_string(kMaxScriptSteps) + " steps");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Permutation avg_free_permutation(int n, AvgFreeMethod method) {
  if (n < 1) throw ValidationError("avg_free_permutation needs n >= 1");

  if (method == AvgFreeMethod::kPowerOfTwo) {
    std::vector<int> cur{1};
    while (static_cast<int>(cur.size()) < n) {
      const std::size_t m = cur.size();
      std::vector<int> next(2 * m);
      for (std::size_t i = 0; i < m; ++i) {
        next[i] = 2 * cur[i];
        next[m + i] = 2 * cur[i] - 1;
      }
      cur.swap(next);
    }
    std::vector<int> out;
    out.reserve(n);
    for (int v : cur) {
      if (v <= n) out.push_back(v);
    }
    return Permutation(std::move(out));
  }

  std::map<int, std::vector<int>> memo;
  memo[1] = {1};
  auto solve = [&memo](auto&& self, int m) -> const std::vector<int>& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    const std::vector<int>& evens = self(self, m / 2);
    const std::vector<int>& odds = self(self, m - m / 2);
    std::vector<int> out;
    out.reserve(m);
    for (int v : evens) out.push_back(2 * v);
    for (int v : odds) out.push_back(2 * v - 1);
    return memo.emplace(m, std::move(out)).first->second;
  };
  return Permutation(solve(solve, n));
}

bool is_average_free(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[p[i]] = i;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((p[i] - p[j]) % 2 != 0) continue;
      const int k = pos[(p[i] + p[j]) / 2];
      if (k > i && k < j) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

OpScript sort_by_rotations_v1(const Permutation& p, int rotation_case) {
  if (rotation_case != 1 && rotation_case != 2) throw ValidationError("rotation case must be 1 or 2");
  const int n = p.size();
  OpScript script{ScriptKind::kRotationV1, rotation_case, {}};
  if (n <= 1) return script;

  // Splits that rotate: the whole array left, the whole array right, and
  // positions 1..n-1 left with position n fixed.
  const int whole_left = rotation_case == 1 ? n : n + 1;
  const int whole_right = 0;
  const int window_left = rotation_case == 1 ? n - 1 : n;

  std::vector<int> a(p.values().begin(), p.values().end());
  auto emit = [&](int split, std::int64_t count) {
    if (count == 0) return;
    script.steps.push_back(RotationStep{split, -count, count});
    rotate_sides(a, rotation_case, split, count);
  };

  emit(whole_left, position_of(a, 1) - 1);
  for (int k = 2; k <= n; ++k) {
    if (a[k - 1] == k) continue;
    emit(whole_right, n - position_of(a, k));
    const int s = n - 1;
    const int q = position_of(a, 1);
    const int r = n - k + 1;
    emit(window_left, q >= r ? q - r : q + s - r);
    emit(whole_left, position_of(a, 1) - 1);
  }
  return script;
}

OpScript sort_by_rotations_v2(const Permutation& p) {
  const int n = p.size();
  OpScript script{ScriptKind::kRotationV2, 1, {}};
  if (n == 0) return script;

  std::vector<int> a(p.values().begin(), p.values().end());
  auto emit = [&](int position) {
    script.steps.push_back(ReversalStep{position});
    std::reverse(a.begin(), a.begin() + std::max(position - 1, 0));
    std::reverse(a.begin() + std::min(position, n), a.end());
  };

  emit(position_of(a, 1) + 1);
  for (int k = 2; k <= n; ++k) {
    const int pk = position_of(a, k);
    emit(pk);
    emit(pk + 1);
  }
  emit(0);
  return script;
}

// ---------------------------------------------------------------------------

std::optional<OpScript> sort_by_allowed_swaps(const Permutation& p,
                                              std::span<const std::pair<int, int>> allowed) {
  const int n = p.size();
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [u, v] : allowed) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ValidationError("allowed pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // BFS spanning forest.
  std::vector<int> parent(n + 1, 0), depth(n + 1, 0), comp(n + 1, 0);
  for (int root = 1; root <= n; ++root) {
    if (comp[root]) continue;
    comp[root] = root;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (comp[v]) continue;
        comp[v] = root;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
  }

  std::vector<int> a(n + 1), where(n + 1);
  for (int i = 1; i <= n; ++i) {
    a[i] = p(i);
    where[p(i)] = i;
  }
  for (int v = 1; v <= n; ++v) {
    if (comp[where[v]] != comp[v]) return std::nullopt;
  }

  OpScript script{ScriptKind::kSwap, 1, {}};
  auto swap_at = [&](int x, int y) {
    script.steps.push_back(SwapStep{std::min(x, y), std::max(x, y)});
    check_script_size(script.steps.size());
    std::swap(a[x], a[y]);
    where[a[x]] = x;
    where[a[y]] = y;
  };

  std::vector<int> head, tail;
  for (int i = 1; i <= n; ++i) {
    if (a[i] == i) continue;
    // Tree path from where[i] to i.
    int u = where[i];
    int v = i;
    head.clear();
    tail.clear();
    while (depth[u] > depth[v]) {
      head.push_back(u);
      u = parent[u];
    }
    while (depth[v] > depth[u]) {
      tail.push_back(v);
      v = parent[v];
    }
    while (u != v) {
      head.push_back(u);
      tail.push_back(v);
      u = parent[u];
      v = parent[v];
    }
    head.push_back(u);
    head.insert(head.end(), tail.rbegin(), tail.rend());

    const int k = static_cast<int>(head.size());
    for (int j = 0; j + 1 < k; ++j) swap_at(head[j], head[j + 1]);
    for (int j = k - 2; j >= 1; --j) swap_at(head[j], head[j - 1]);
  }
  return script;
}

// ---------------------------------------------------------------------------

CycleSortResult min_cost_cycle_sort(const Permutation& p, std::span<const Cost> costs) {
  const int n = p.size();
  if (static_cast<int>(costs.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " costs, got " + std::to_string(costs.size()));
  }
  for (int v = 1; v <= n; ++v) {
    if (costs[v - 1] <= 0) throw ValidationError("cost of value " + std::to_string(v) + " must be positive");
  }
  auto c = [&costs](int v) { return costs[v - 1]; };

  CycleSortResult result;
  result.script.kind = ScriptKind::kSwap;
  if (n == 0) return result;

  int r = 1;
  for (int v = 2; v <= n; ++v) {
    if (c(v) < c(r)) r = v;
  }

  std::vector<int> a(n + 1), where(n + 1);
  for (int i = 1; i <= n; ++i) {
    a[i] = p(i);
    where[p(i)] = i;
  }
  auto swap_values = [&](int x, int y) {
    const int px = where[x];
    const int py = where[y];
    result.script.steps.push_back(SwapStep{std::min(px, py), std::max(px, py)});
    std::swap(a[px], a[py]);
    where[x] = py;
    where[y] = px;
  };
  // Each swap sends home the value owning z's current position.
  auto rotate_cycle = [&](int z, int home) {
    while (where[z] != home) swap_values(z, where[z]);
  };

  std::vector<char> seen(n + 1, 0);
  std::vector<int> cycle;
  for (int start = 1; start <= n; ++start) {
    if (seen[start] || p(start) == start) continue;
    cycle.clear();
    for (int v = start; !seen[v]; v = p(v)) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    Cost sc = 0;
    int q = cycle.front();
    for (int v : cycle) {
      sc += c(v);
      if (c(v) < c(q) || (c(v) == c(q) && v < q)) q = v;
    }
    const Cost k = static_cast<Cost>(cycle.size());
    const Cost choice1 = sc - c(q) + (k - 1) * c(q);
    const bool r_outside = std::find(cycle.begin(), cycle.end(), r) == cycle.end();
    const Cost choice2 = sc - c(q) + (k - 1) * c(r) + 2 * (c(q) + c(r));

    if (r_outside && choice2 < choice1) {
      result.total_cost += choice2;
      swap_values(q, r);
      rotate_cycle(r, q);
      swap_values(q, r);
    } else {
      result.total_cost += choice1;
      rotate_cycle(q, q);
    }
  }
  return result;
}

Cost swap_script_cost(const Permutation& p, std::span<const Cost> costs, const OpScript& script) {
  std::vector<int> a(p.values().begin(), p.values().end());
  Cost total = 0;
  for (const ScriptStep& step : script.steps) {
    const auto* s = std::get_if<SwapStep>(&step);
    if (!s) throw ValidationError("swap_script_cost expects swap steps");
    total += costs[a[s->i - 1] - 1] + costs[a[s->j - 1] - 1];
    std::swap(a[s->i - 1], a[s->j - 1]);
  }
  return total;
}

// ---------------------------------------------------------------------------

Cost move_sort_min_cost(const Permutation& p) {
  using detail::kInfiniteCost;
  const int n = p.size();
  if (n == 0) return 0;
  const std::vector<int> pos = p.positions();
  auto value_at = [&p, n](int j) { return j == n + 1 ? n + 1 : p(j); };

  // next_row = Cmin(i+1, *), row = Cmin(i, *); index 1..n+1.
  std::vector<Cost> next_row(n + 2, kInfiniteCost), row(n + 2, kInfiniteCost);
  next_row[n + 1] = 0;

  for (int i = n; i >= 1; --i) {
    int pos_prime = 1;
    for (int k = 1; k < i; ++k) {
      if (pos[k] < pos[i]) ++pos_prime;
    }

    // Move i just before i+1.
    Cost pdest = 1;
    for (int j = 1; j <= n + 1; ++j) {
      if (value_at(j) < i) ++pdest;
      row[j] = detail::add_cost(next_row[j], pos_prime + pdest);
    }

    // Keep i in place, compensating for smaller elements moved in front of it.
    Cost extra_cost = 0;
    for (int j = pos[i] + 1; j <= n + 1; ++j) {
      row[pos[i]] = std::min(row[pos[i]], detail::add_cost(next_row[j], extra_cost));
      if (value_at(j) < i) extra_cost += i - value_at(j);
    }
    next_row.swap(row);
  }
  return *std::min_element(next_row.begin() + 1, next_row.end());
}

}  // namespace resproc::perm
