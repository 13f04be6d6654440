#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "resproc/perm_sort.hpp"

namespace resproc::perm {
namespace {

void require_same_multiset(const MultiPermutation& p, std::span<const int> q) {
  if (static_cast<int>(q.size()) != p.size()) {
    throw ValidationError("sequences differ in length: " + std::to_string(p.size()) + " vs " +
                          std::to_string(q.size()));
  }
  std::vector<int> c = p.counts();
  for (int v : q) {
    if (v < 1 || v > p.distinct() || c[v] == 0) {
      throw ValidationError("sequences hold different multisets of values");
    }
    --c[v];
  }
}

// Removes from `list` the entries that also occur in `common`; both ascending.
void strip_common(const std::vector<int>& list, const std::vector<int>& common, std::vector<int>& out) {
  out.clear();
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < list.size() && b < common.size()) {
    if (list[a] == common[b]) {
      ++a;
      ++b;
    } else {
      out.push_back(list[a++]);
    }
  }
  out.insert(out.end(), list.begin() + static_cast<std::ptrdiff_t>(a), list.end());
}

struct CircularScratch {
  std::vector<int> merged;
  std::vector<int> common;
  std::vector<int> p_only;
  std::vector<int> q_only;
};

// Adds the contribution of one value with position lists lp and lq.
void accumulate_value(const std::vector<int>& lp, const std::vector<int>& lq, CircularScratch& w,
                      std::int64_t& ni, std::int64_t& ci) {
  w.merged.resize(lp.size() + lq.size());
  std::merge(lp.begin(), lp.end(), lq.begin(), lq.end(), w.merged.begin());
  w.common.clear();
  for (std::size_t t = 0; t + 1 < w.merged.size(); ++t) {
    if (w.merged[t] == w.merged[t + 1]) {
      w.common.push_back(w.merged[t]);
      ++t;
    }
  }
  strip_common(lp, w.common, w.p_only);
  strip_common(lq, w.common, w.q_only);
  ni += static_cast<std::int64_t>(w.p_only.size());
  for (std::size_t j = 0; j < w.p_only.size(); ++j) ci += std::abs(w.p_only[j] - w.q_only[j]);
}

std::vector<std::vector<int>> occurrence_lists(std::span<const int> q, int k) {
  std::vector<std::vector<int>> lists(k + 1);
  for (std::size_t i = 0; i < q.size(); ++i) lists[q[i]].push_back(static_cast<int>(i + 1));
  return lists;
}

std::int64_t inversions_merge(std::vector<int> a) {
  const std::size_t n = a.size();
  std::vector<int> buf(n);
  std::int64_t ninv = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t out = lo;
      while (i < mid && j < hi) {
        if (a[i] < a[j]) {
          buf[out++] = a[i++];
        } else {
          ninv += static_cast<std::int64_t>(mid - i);
          buf[out++] = a[j++];
        }
      }
      while (i < mid) buf[out++] = a[i++];
      while (j < hi) buf[out++] = a[j++];
    }
    a.swap(buf);
  }
  return ninv;
}

std::int64_t inversions_tree(std::span<const int> r) {
  const int n = static_cast<int>(r.size());
  int size = 1;
  while (size < n) size *= 2;
  std::vector<int> tree(2 * size, 0);
  for (int v = 1; v <= n; ++v) tree[size + v - 1] = 1;
  for (int x = size - 1; x >= 1; --x) tree[x] = tree[2 * x] + tree[2 * x + 1];

  std::int64_t ninv = 0;
  for (int v : r) {
    // Sum of leaves [1, v-1], i.e. leaf indices [0, v-1).
    int lo = size;
    int hi = size + v - 1;
    std::int64_t s = 0;
    while (lo < hi) {
      if (lo & 1) s += tree[lo++];
      if (hi & 1) s += tree[--hi];
      lo /= 2;
      hi /= 2;
    }
    ninv += s;
    for (int x = size + v - 1; x >= 1; x /= 2) --tree[x];
  }
  return ninv;
}

std::int64_t inversions_blocks(std::span<const int> r) {
  const int n = static_cast<int>(r.size());
  const int block = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
  std::vector<int> cell(n + 1, 1);
  std::vector<int> sums((n + block - 1) / block + 1, 0);
  for (int v = 1; v <= n; ++v) ++sums[(v - 1) / block];

  std::int64_t ninv = 0;
  for (int v : r) {
    const int last = v - 1;  // count cells 1..last
    const int full = last / block;
    std::int64_t s = 0;
    for (int b = 0; b < full; ++b) s += sums[b];
    for (int x = full * block + 1; x <= last; ++x) s += cell[x];
    ninv += s;
    cell[v] = 0;
    --sums[(v - 1) / block];
  }
  return ninv;
}

}  // namespace

// ---------------------------------------------------------------------------

std::pair<std::int64_t, std::int64_t> circular_sort_cost(const MultiPermutation& p,
                                                          std::span<const int> q) {
  require_same_multiset(p, q);
  const auto lq = occurrence_lists(q, p.distinct());
  CircularScratch w;
  std::int64_t ni = 0;
  std::int64_t ci = 0;
  for (int v = 1; v <= p.distinct(); ++v) {
    const std::vector<int> lp(p.occurrences(v).begin(), p.occurrences(v).end());
    accumulate_value(lp, lq[v], w, ni, ci);
  }
  return {ni, ci};
}

CircularSortResult circular_multiperm_sort(const MultiPermutation& p) {
  const int n = p.size();
  const int k = p.distinct();
  CircularSortResult best;
  if (n == 0) return best;

  std::vector<int> sorted(p.values().begin(), p.values().end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::vector<int>> lp(k + 1);
  for (int v = 1; v <= k; ++v) lp[v].assign(p.occurrences(v).begin(), p.occurrences(v).end());

  std::vector<std::vector<int>> lq(k + 1);
  CircularScratch w;
  bool have = false;
  for (int shift = 0; shift < n; ++shift) {
    for (auto& list : lq) list.clear();
    for (int i = 0; i < n; ++i) lq[sorted[(i + shift) % n]].push_back(i + 1);
    std::int64_t ni = 0;
    std::int64_t ci = 0;
    for (int v = 1; v <= k; ++v) accumulate_value(lp[v], lq[v], w, ni, ci);
    if (!have || std::pair(ni, ci) < std::pair(best.swaps, best.cost)) {
      have = true;
      best.swaps = ni;
      best.cost = ci;
      best.shift = shift;
    }
  }
  best.rotation.resize(n);
  for (int i = 0; i < n; ++i) best.rotation[i] = sorted[(i + best.shift) % n];
  return best;
}

// ---------------------------------------------------------------------------

std::int64_t count_inversions(std::span<const int> r, InversionMethod method) {
  Permutation checked(std::vector<int>(r.begin(), r.end()));
  switch (method) {
    case InversionMethod::kMerge: return inversions_merge(std::vector<int>(r.begin(), r.end()));
    case InversionMethod::kTree: return inversions_tree(r);
    case InversionMethod::kBlocks: return inversions_blocks(r);
  }
  throw std::logic_error("unknown inversion method");
}

std::vector<int> adjacent_swap_target(const MultiPermutation& p, const MultiPermutation& q) {
  require_same_multiset(p, q.values());
  std::vector<int> idx(p.distinct() + 1, 0);
  std::vector<int> r(p.size());
  for (int i = 1; i <= p.size(); ++i) {
    const int v = p(i);
    r[i - 1] = q.occurrences(v)[idx[v]++];
  }
  return r;
}

AdjacentSwapResult min_adjacent_swaps(const MultiPermutation& p, const MultiPermutation& q,
                                      bool with_script) {
  const std::vector<int> r = adjacent_swap_target(p, q);
  AdjacentSwapResult result;
  result.count = inversions_merge(r);

  if (p.distinct() <= 2) {
    std::int64_t linear = 0;
    const auto lp = p.occurrences(1);
    const auto lq = q.occurrences(1);
    for (std::size_t i = 0; i < lp.size(); ++i) linear += std::abs(lp[i] - lq[i]);
    if (linear != result.count) {
      throw std::logic_error("two-value distance " + std::to_string(linear) +
                             " disagrees with inversion count " + std::to_string(result.count));
    }
  }

  if (with_script) {
    if (result.count > static_cast<std::int64_t>(kMaxScriptSteps)) {
      throw CapacityError("adjacent-swap script of " + std::to_string(result.count) + " steps exceeds " +
                          std::to_string(kMaxScriptSteps));
    }
    OpScript script{ScriptKind::kAdjacentSwap, 1, {}};
    script.steps.reserve(static_cast<std::size_t>(result.count));
    std::vector<int> cur(p.values().begin(), p.values().end());
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
      if (cur[i] == q(i + 1)) continue;
      int j = i + 1;
      while (cur[j] != q(i + 1)) ++j;
      for (int t = j; t > i; --t) {
        std::swap(cur[t - 1], cur[t]);
        script.steps.push_back(AdjacentSwapStep{t});
      }
    }
    result.script = std::move(script);
  }
  return result;
}

// ---------------------------------------------------------------------------

PairCounts pair_order_counts(const MultiPermutation& p) {
  const int k = p.distinct();
  PairCounts num(k + 1, std::vector<std::int64_t>(k + 1, 0));
  std::vector<std::int64_t> cnt(k + 1, 0);
  for (int v : p.values()) {
    for (int j = 1; j <= k; ++j) num[j][v] += cnt[j];
    ++cnt[v];
  }
  return num;
}

std::int64_t grouping_cost(const PairCounts& num, std::span<const int> order) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) total += num[order[j]][order[i]];
  }
  return total;
}

SjtGenerator::SjtGenerator(int k) : k_(k), perm_(k), c_(k + 1, 0), o_(k + 1, 1) {
  if (k < 1) throw ValidationError("SJT generator needs k >= 1");
  for (int i = 0; i < k; ++i) perm_[i] = i + 1;
}

std::optional<int> SjtGenerator::next() {
  if (k_ == 0) return std::nullopt;
  int j = k_;
  int s = 0;
  while (true) {
    const int q = c_[j] + o_[j];
    if (q < 0) {
      o_[j] = -o_[j];
      --j;
      continue;
    }
    if (q == j) {
      if (j == 1) {
        k_ = 0;
        return std::nullopt;
      }
      ++s;
      o_[j] = -o_[j];
      --j;
      continue;
    }
    const int x = j - c_[j] + s;
    const int y = j - q + s;
    std::swap(perm_[x - 1], perm_[y - 1]);
    c_[j] = q;
    return std::min(x, y);
  }
}

GroupingResult group_identical_min_swaps(const MultiPermutation& p, GroupingMethod method) {
  const int k = p.distinct();
  GroupingResult result;
  if (k == 0) return result;
  const PairCounts num = pair_order_counts(p);

  if (method == GroupingMethod::kSjt) {
    if (k > kMaxSjtValues) {
      throw CapacityError("sjt enumeration supports k <= " + std::to_string(kMaxSjtValues) +
                          "; use the bitmask method");
    }
    SjtGenerator gen(k);
    std::int64_t v = grouping_cost(num, gen.current());
    result.count = v;
    result.order.assign(gen.current().begin(), gen.current().end());
    while (const auto i = gen.next()) {
      const auto q = gen.current();
      v += num[q[*i]][q[*i - 1]] - num[q[*i - 1]][q[*i]];
      if (v < result.count ||
          (v == result.count && std::lexicographical_compare(q.begin(), q.end(), result.order.begin(),
                                                             result.order.end()))) {
        result.count = v;
        result.order.assign(q.begin(), q.end());
      }
    }
    return result;
  }

  if (k > kMaxBitmaskValues) {
    throw CapacityError("bitmask DP supports k <= " + std::to_string(kMaxBitmaskValues));
  }

  // Sum(S, i) = sum of num(i, j) over j in S, from two half-width tables.
  const int lo_bits = k / 2;
  const int hi_bits = k - lo_bits;
  const std::uint32_t lo_mask = (1u << lo_bits) - 1;
  std::vector<std::vector<std::int64_t>> lo(k + 1, std::vector<std::int64_t>(1u << lo_bits, 0));
  std::vector<std::vector<std::int64_t>> hi(k + 1, std::vector<std::int64_t>(1u << hi_bits, 0));
  for (int i = 1; i <= k; ++i) {
    for (std::uint32_t m = 1; m < (1u << lo_bits); ++m) {
      lo[i][m] = lo[i][m & (m - 1)] + num[i][std::countr_zero(m) + 1];
    }
    for (std::uint32_t m = 1; m < (1u << hi_bits); ++m) {
      hi[i][m] = hi[i][m & (m - 1)] + num[i][std::countr_zero(m) + lo_bits + 1];
    }
  }
  auto sum = [&](std::uint32_t set, int i) { return lo[i][set & lo_mask] + hi[i][set >> lo_bits]; };

  const std::uint32_t full = (1u << k) - 1;
  std::vector<std::int64_t> nmin(std::size_t{full} + 1, 0);
  for (std::uint32_t set = 1; set <= full; ++set) {
    std::int64_t best = -1;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      const std::uint32_t without = set & ~(1u << b);
      const std::int64_t cand = nmin[without] + sum(without, b + 1);
      if (best < 0 || cand < best) best = cand;
    }
    nmin[set] = best;
  }
  result.count = nmin[full];

  // Smallest value first whenever the remainder can still reach the optimum.
  std::uint32_t placed = 0;
  std::int64_t spent = 0;
  for (int t = 0; t < k; ++t) {
    for (int i = 1; i <= k; ++i) {
      const std::uint32_t bit = 1u << (i - 1);
      if (placed & bit) continue;
      const std::uint32_t prefix = placed | bit;
      const std::uint32_t rest = full & ~prefix;
      std::int64_t cross = 0;
      for (std::uint32_t r = rest; r; r &= r - 1) cross += sum(prefix, std::countr_zero(r) + 1);
      const std::int64_t step = sum(placed, i);
      if (spent + step + cross + nmin[rest] == result.count) {
        placed = prefix;
        spent += step;
        result.order.push_back(i);
        break;
      }
    }
  }
  return result;
}

}  // namespace resproc::perm
