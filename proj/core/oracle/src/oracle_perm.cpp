#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "resproc/oracle.hpp"

namespace resproc::oracle {
namespace {

void check_search_size(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxStateSearchLength)) {
    throw CapacityError("state search supports at most " + std::to_string(kMaxStateSearchLength) + " elements");
  }
}

std::vector<int> do_move(const std::vector<int>& a, MoveKind kind, int i, int j) {
  std::vector<int> b = a;
  if (kind == MoveKind::kMove) {
    const int v = b[i - 1];
    b.erase(b.begin() + (i - 1));
    b.insert(b.begin() + (j - 1), v);
  } else {
    std::swap(b[i - 1], b[j - 1]);
  }
  return b;
}

std::vector<int> sorted_copy(std::vector<int> a) {
  std::sort(a.begin(), a.end());
  return a;
}

// Unit rotation of a[first, last): +1 moves every element one step right.
void unit_rotate(std::vector<int>& a, int first, int last, int dir) {
  if (last - first <= 1) return;
  if (dir > 0) {
    const int keep = a[last - 1];
    for (int t = last - 1; t > first; --t) a[t] = a[t - 1];
    a[first] = keep;
  } else {
    const int keep = a[first];
    for (int t = first; t + 1 < last; ++t) a[t] = a[t + 1];
    a[last - 1] = keep;
  }
}

void reverse_range(std::vector<int>& a, int first, int last) {
  for (int x = first, y = last - 1; x < y; ++x, --y) {
    const int t = a[x];
    a[x] = a[y];
    a[y] = t;
  }
}

}  // namespace

std::optional<Cost> oracle_perm_state_search(const std::vector<int>& start, const GoalTest& goal, MoveKind kind,
                                             const MoveCost& cost) {
  check_search_size(start.size());
  const int n = static_cast<int>(start.size());
  using Entry = std::pair<Cost, std::vector<int>>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::map<std::vector<int>, Cost> dist;
  dist[start] = 0;
  frontier.push({0, start});
  while (!frontier.empty()) {
    auto [d, a] = frontier.top();
    frontier.pop();
    if (d != dist[a]) continue;
    if (goal(a)) return d;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        if (kind == MoveKind::kAdjacentSwap && j != i + 1) continue;
        if (kind == MoveKind::kSwap && j < i) continue;
        const std::optional<Cost> c = cost(a, i, j);
        if (!c) continue;
        std::vector<int> b = do_move(a, kind, i, j);
        auto it = dist.find(b);
        if (it == dist.end() || d + *c < it->second) {
          dist[b] = d + *c;
          frontier.push({d + *c, std::move(b)});
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Cost> oracle_perm_state_search(const std::vector<int>& start, const std::vector<int>& target,
                                             MoveKind kind, const MoveCost& cost) {
  return oracle_perm_state_search(
      start, [&target](const std::vector<int>& a) { return a == target; }, kind, cost);
}

std::optional<Cost> oracle_adjacent_swaps(const std::vector<int>& start, const std::vector<int>& target) {
  return oracle_perm_state_search(start, target, MoveKind::kAdjacentSwap,
                                  [](const std::vector<int>&, int, int) { return Cost{1}; });
}

std::optional<Cost> oracle_value_cost_sort(const std::vector<int>& p, std::span<const Cost> costs) {
  return oracle_perm_state_search(p, sorted_copy(p), MoveKind::kSwap,
                                  [costs](const std::vector<int>& a, int i, int j) -> std::optional<Cost> {
                                    return costs[a[i - 1] - 1] + costs[a[j - 1] - 1];
                                  });
}

std::optional<Cost> oracle_move_sort(const std::vector<int>& p) {
  return oracle_perm_state_search(p, sorted_copy(p), MoveKind::kMove,
                                  [](const std::vector<int>&, int i, int j) -> std::optional<Cost> { return i + j; });
}

bool oracle_sortable_with_swaps(const std::vector<int>& p, std::span<const std::pair<int, int>> allowed) {
  std::set<std::pair<int, int>> ok;
  for (auto [a, b] : allowed) ok.insert(std::minmax(a, b));
  return oracle_perm_state_search(p, sorted_copy(p), MoveKind::kSwap,
                                  [&ok](const std::vector<int>&, int i, int j) -> std::optional<Cost> {
                                    if (!ok.count({i, j})) return std::nullopt;
                                    return Cost{1};
                                  })
      .has_value();
}

std::optional<Cost> oracle_group_min_swaps(const std::vector<int>& p) {
  auto grouped = [](const std::vector<int>& a) {
    std::set<int> closed;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (closed.count(a[i])) return false;
      if (i + 1 == a.size() || a[i + 1] != a[i]) closed.insert(a[i]);
    }
    return true;
  };
  return oracle_perm_state_search(p, grouped, MoveKind::kAdjacentSwap,
                                  [](const std::vector<int>&, int, int) { return Cost{1}; });
}

std::pair<std::int64_t, std::int64_t> oracle_circular_swaps(const std::vector<int>& p) {
  // Swap count dominates: n <= 8 keeps every distance total below 1000.
  constexpr Cost kPerSwap = 1000;
  const std::vector<int> sorted = sorted_copy(p);
  std::set<std::vector<int>> goals;
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    std::vector<int> r = sorted;
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(s), r.end());
    goals.insert(r);
  }
  const std::optional<Cost> best = oracle_perm_state_search(
      p, [&goals](const std::vector<int>& a) { return goals.count(a) > 0; }, MoveKind::kSwap,
      [](const std::vector<int>& a, int i, int j) -> std::optional<Cost> {
        if (a[i - 1] == a[j - 1]) return std::nullopt;
        return kPerSwap + std::abs(i - j);
      });
  if (p.empty()) return {0, 0};
  return {*best / kPerSwap, *best % kPerSwap};
}

std::pair<std::int64_t, std::int64_t> oracle_circular_formula(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  const std::vector<int> sorted = sorted_copy(p);
  std::optional<std::pair<std::int64_t, std::int64_t>> best;
  for (int s = 0; s < std::max(n, 1); ++s) {
    std::vector<int> q = sorted;
    if (n > 0) std::rotate(q.begin(), q.begin() + s, q.end());
    std::int64_t ni = 0;
    std::int64_t ci = 0;
    std::map<int, std::vector<int>> from;
    std::map<int, std::vector<int>> to;
    for (int i = 0; i < n; ++i) {
      if (p[i] == q[i]) continue;
      ++ni;
      from[p[i]].push_back(i);
      to[q[i]].push_back(i);
    }
    for (auto& [v, list] : from) {
      for (std::size_t t = 0; t < list.size(); ++t) ci += std::abs(list[t] - to[v][t]);
    }
    if (!best || std::pair{ni, ci} < *best) best = {ni, ci};
  }
  return *best;
}

std::int64_t oracle_inversions(std::span<const int> r) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (r[i] > r[j]) ++count;
    }
  }
  return count;
}

bool oracle_average_free(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if ((p[i] + p[j]) % 2 != 0) continue;
      for (int m = i + 1; m < j; ++m) {
        if (2 * p[m] == p[i] + p[j]) return false;
      }
    }
  }
  return true;
}

std::pair<std::vector<int>, std::int64_t> oracle_replay(std::vector<int> a, const perm::OpScript& script) {
  const int n = static_cast<int>(a.size());
  std::int64_t elementary = 0;
  for (const perm::ScriptStep& step : script.steps) {
    if (const auto* r = std::get_if<perm::RotationStep>(&step)) {
      int lo_end = r->split;
      int hi_begin = r->split;
      if (script.kind == perm::ScriptKind::kRotationV1 && script.rotation_case == 2) {
        lo_end = std::max(r->split - 1, 0);
        hi_begin = std::min(r->split, n);
      }
      const std::int64_t left = std::llabs(r->left_shift);
      const std::int64_t right = std::llabs(r->right_shift);
      for (std::int64_t t = 0; t < std::max(left, right); ++t) {
        if (t < left) unit_rotate(a, 0, lo_end, r->left_shift > 0 ? 1 : -1);
        if (t < right) unit_rotate(a, hi_begin, n, r->right_shift > 0 ? 1 : -1);
        ++elementary;
      }
    } else if (const auto* v = std::get_if<perm::ReversalStep>(&step)) {
      reverse_range(a, 0, std::max(v->position - 1, 0));
      reverse_range(a, std::min(v->position, n), n);
      ++elementary;
    } else if (const auto* s = std::get_if<perm::SwapStep>(&step)) {
      const int t = a[s->i - 1];
      a[s->i - 1] = a[s->j - 1];
      a[s->j - 1] = t;
      ++elementary;
    } else if (const auto* w = std::get_if<perm::AdjacentSwapStep>(&step)) {
      const int t = a[w->i - 1];
      a[w->i - 1] = a[w->i];
      a[w->i] = t;
      ++elementary;
    } else if (const auto* m = std::get_if<perm::MoveStep>(&step)) {
      const int dir = m->to > m->from ? -1 : 1;
      unit_rotate(a, std::min(m->from, m->to) - 1, std::max(m->from, m->to), dir);
      ++elementary;
    }
  }
  return {std::move(a), elementary};
}

}  // namespace resproc::oracle
