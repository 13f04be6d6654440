#include <algorithm>
#include <bit>
#include <iterator>
#include <set>
#include <string>
#include <tuple>

#include "resproc/disjoint_set.hpp"
#include "resproc/toggle.hpp"

namespace resproc::toggle {
namespace {

using detail::kInfiniteCost;
using Mask = std::uint32_t;

std::string edge_text(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

// Reorders the bits of `mask` listed in `idx` into positions 0..idx.size()-1.
Mask extract_bits(Mask mask, const std::vector<int>& idx) {
  Mask out = 0;
  for (std::size_t j = 0; j < idx.size(); ++j) out |= ((mask >> idx[j]) & 1u) << j;
  return out;
}

// XOR over selected members j of (their in-set neighbours | j itself).
std::vector<Mask> toggle_table(const std::vector<Mask>& closed_nbr) {
  const std::size_t width = closed_nbr.size();
  std::vector<Mask> table(std::size_t{1} << width, 0);
  for (Mask m = 1; m < table.size(); ++m) table[m] = table[m & (m - 1)] ^ closed_nbr[std::countr_zero(m)];
  return table;
}

std::vector<Cost> cost_table(const std::vector<Cost>& costs) {
  std::vector<Cost> table(std::size_t{1} << costs.size(), 0);
  for (Mask m = 1; m < table.size(); ++m) table[m] = table[m & (m - 1)] + costs[std::countr_zero(m)];
  return table;
}

struct Node {
  std::vector<int> bag;  // ascending vertex ids
  int parent = 0;
  std::vector<int> sons;
  std::vector<Mask> toggles;     // per CSel
  std::vector<Cost> sel_cost;    // SumCSel per CSel
  Mask goal = 0;                 // (I+F) mod 2 over the bag

  // Common(parent, this), ascending.
  int c = 0;
  std::vector<Mask> proj_self;      // t1/t2 for this bag
  std::vector<Mask> proj_parent;    // t1/t2 for the parent's bag
  std::vector<Mask> expand_parent;  // common mask -> parent bag mask
  std::vector<Mask> common_toggles; // NumSelCommon parity plus the self bit
  std::vector<Cost> common_cost;    // SumCSelCommon
  Mask private_mask = 0;

  // CminCommon[state' << c | sel'] with the argmin (CState, CSel).
  std::vector<Cost> cc;
  std::vector<Mask> cc_state;
  std::vector<Mask> cc_sel;
};

struct Back {
  Mask prev_state;
  Mask son_state;
};

class TreewidthSolver {
 public:
  TreewidthSolver(const ToggleInstance& inst, const TreeDecomposition& td) : inst_(inst) {
    const int n = static_cast<int>(td.bags.size());
    nodes_.resize(n + 1);
    for (int x = 1; x <= n; ++x) {
      nodes_[x].bag = td.bags[x - 1];
      std::sort(nodes_[x].bag.begin(), nodes_[x].bag.end());
      if (static_cast<int>(nodes_[x].bag.size()) > kMaxBagSize) {
        throw CapacityError("bag of node " + std::to_string(x) + " exceeds " + std::to_string(kMaxBagSize) +
                            " vertices");
      }
    }
    for (const auto& [u, v] : inst.edges) edges_.insert(std::minmax(u, v));

    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& [a, b] : td.tree_edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> seen(n + 1, 0);
    order_.push_back(1);
    seen[1] = 1;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const int x = order_[head];
      for (int y : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        nodes_[y].parent = x;
        nodes_[x].sons.push_back(y);
        order_.push_back(y);
      }
    }
    for (int x : order_) prepare(x);
  }

  ToggleResult solve() {
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) project_to_parent(*it);
    const Node& root = nodes_[1];
    ToggleResult result;
    if (root.cc[0] >= kInfiniteCost) return result;
    result.min_cost = root.cc[0];

    std::vector<char> selected(inst_.p + 1, 0);
    std::vector<std::tuple<int, Mask, Mask>> stack{{1, root.cc_state[0], root.cc_sel[0]}};
    std::vector<std::vector<Back>> back;
    while (!stack.empty()) {
      const auto [x, state, sel] = stack.back();
      stack.pop_back();
      const Node& node = nodes_[x];
      for (std::size_t j = 0; j < node.bag.size(); ++j) {
        if (sel >> j & 1u) selected[node.bag[j]] = 1;
      }
      merge_chain(x, sel, &back);
      Mask cur = state;
      for (std::size_t j = node.sons.size(); j-- > 0;) {
        const Node& son = nodes_[node.sons[j]];
        const Back b = back[j][cur];
        const Mask key = b.son_state << son.c | son.proj_parent[sel];
        stack.emplace_back(node.sons[j], son.cc_state[key], son.cc_sel[key]);
        cur = b.prev_state;
      }
    }
    for (int u = 1; u <= inst_.p; ++u) {
      if (selected[u]) result.selection.push_back(u);
    }
    return result;
  }

 private:
  bool adjacent(int u, int v) const { return edges_.count(std::minmax(u, v)) > 0; }

  std::vector<Mask> closed_neighbourhoods(const std::vector<int>& vertices) const {
    std::vector<Mask> nbr(vertices.size(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      nbr[i] |= 1u << i;
      for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (i != j && adjacent(vertices[i], vertices[j])) nbr[i] |= 1u << j;
      }
    }
    return nbr;
  }

  void prepare(int x) {
    Node& node = nodes_[x];
    const int b = static_cast<int>(node.bag.size());
    node.toggles = toggle_table(closed_neighbourhoods(node.bag));
    std::vector<Cost> costs;
    for (int u : node.bag) costs.push_back(inst_.cost[u - 1]);
    node.sel_cost = cost_table(costs);
    for (int j = 0; j < b; ++j) {
      if (inst_.initial[node.bag[j] - 1] != inst_.target[node.bag[j] - 1]) node.goal |= 1u << j;
    }

    std::vector<int> common;
    std::vector<int> self_idx;
    std::vector<int> parent_idx;
    if (node.parent != 0) {
      const std::vector<int>& pbag = nodes_[node.parent].bag;
      for (int j = 0; j < b; ++j) {
        const auto it = std::lower_bound(pbag.begin(), pbag.end(), node.bag[j]);
        if (it != pbag.end() && *it == node.bag[j]) {
          common.push_back(node.bag[j]);
          self_idx.push_back(j);
          parent_idx.push_back(static_cast<int>(it - pbag.begin()));
        }
      }
    }
    node.c = static_cast<int>(common.size());
    node.private_mask = (Mask{1} << b) - 1;
    for (int j : self_idx) node.private_mask &= ~(1u << j);

    node.proj_self.resize(std::size_t{1} << b);
    for (Mask m = 0; m < node.proj_self.size(); ++m) node.proj_self[m] = extract_bits(m, self_idx);
    if (node.parent != 0) {
      const std::size_t pb = nodes_[node.parent].bag.size();
      node.proj_parent.resize(std::size_t{1} << pb);
      for (Mask m = 0; m < node.proj_parent.size(); ++m) node.proj_parent[m] = extract_bits(m, parent_idx);
    }
    node.expand_parent.assign(std::size_t{1} << node.c, 0);
    for (Mask m = 0; m < node.expand_parent.size(); ++m) {
      for (int j = 0; j < node.c; ++j) {
        if (m >> j & 1u) node.expand_parent[m] |= 1u << parent_idx[j];
      }
    }
    node.common_toggles = toggle_table(closed_neighbourhoods(common));
    std::vector<Cost> ccosts;
    for (int u : common) ccosts.push_back(inst_.cost[u - 1]);
    node.common_cost = cost_table(ccosts);
  }

  // Cmin'(X, ns(X), *, sel); optionally records how each state was reached.
  std::vector<Cost> merge_chain(int x, Mask sel, std::vector<std::vector<Back>>* back) const {
    const Node& node = nodes_[x];
    const std::size_t states = std::size_t{1} << node.bag.size();
    std::vector<Cost> cur(states, kInfiniteCost);
    std::vector<Cost> nxt(states);
    cur[node.toggles[sel]] = node.sel_cost[sel];
    if (back) back->assign(node.sons.size(), std::vector<Back>(states, Back{0, 0}));

    for (std::size_t j = 0; j < node.sons.size(); ++j) {
      const Node& son = nodes_[node.sons[j]];
      const Mask sel_c = son.proj_parent[sel];
      const Mask corr = son.expand_parent[son.common_toggles[sel_c]];
      const Cost shared = son.common_cost[sel_c];
      std::fill(nxt.begin(), nxt.end(), kInfiniteCost);
      for (Mask st_c = 0; st_c < (Mask{1} << son.c); ++st_c) {
        const Cost val = son.cc[st_c << son.c | sel_c];
        if (val >= kInfiniteCost) continue;
        const Mask delta = son.expand_parent[st_c] ^ corr;
        for (Mask st = 0; st < states; ++st) {
          if (cur[st] >= kInfiniteCost) continue;
          const Cost cand = cur[st] + val - shared;
          if (cand < nxt[st ^ delta]) {
            nxt[st ^ delta] = cand;
            if (back) (*back)[j][st ^ delta] = Back{st, st_c};
          }
        }
      }
      cur.swap(nxt);
    }
    return cur;
  }

  void project_to_parent(int x) {
    Node& node = nodes_[x];
    const std::size_t combos = std::size_t{1} << node.bag.size();
    const std::size_t entries = std::size_t{1} << (2 * node.c);
    node.cc.assign(entries, kInfiniteCost);
    node.cc_state.assign(entries, 0);
    node.cc_sel.assign(entries, 0);
    for (Mask sel = 0; sel < combos; ++sel) {
      const std::vector<Cost> cur = merge_chain(x, sel, nullptr);
      for (Mask st = 0; st < combos; ++st) {
        if (cur[st] >= kInfiniteCost || ((st ^ node.goal) & node.private_mask) != 0) continue;
        const Mask key = node.proj_self[st] << node.c | node.proj_self[sel];
        if (cur[st] < node.cc[key]) {
          node.cc[key] = cur[st];
          node.cc_state[key] = st;
          node.cc_sel[key] = sel;
        }
      }
    }
  }

  const ToggleInstance& inst_;
  std::set<std::pair<int, int>> edges_;
  std::vector<Node> nodes_;
  std::vector<int> order_;
};

}  // namespace

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kInvalidVertex: return "invalid-vertex";
    case ViolationKind::kInvalidNode: return "invalid-node";
    case ViolationKind::kNotATree: return "not-a-tree";
    case ViolationKind::kVertexNotCovered: return "vertex-not-covered";
    case ViolationKind::kConnectivity: return "connectivity";
    case ViolationKind::kEdgeNotCovered: return "edge-not-covered";
    case ViolationKind::kWidth: return "width";
  }
  return "unknown";
}

std::vector<Violation> validate_decomposition(const ToggleInstance& inst, const TreeDecomposition& td) {
  std::vector<Violation> out;
  const int n = static_cast<int>(td.bags.size());
  const int p = inst.p;

  // Flat membership index per (node, bag slot), for per-vertex connectivity.
  std::vector<std::vector<int>> nodes_of(p + 1);
  std::vector<std::vector<std::pair<int, int>>> slots(n + 1);  // (vertex, flat id)
  int flat = 0;
  for (int x = 1; x <= n; ++x) {
    std::set<int> in_bag;
    for (int u : td.bags[x - 1]) {
      if (u < 1 || u > p) {
        out.push_back({ViolationKind::kInvalidVertex, u, {0, 0}, x,
                       "node " + std::to_string(x) + ": vertex " + std::to_string(u) + " out of range"});
        continue;
      }
      if (!in_bag.insert(u).second) {
        out.push_back({ViolationKind::kInvalidVertex, u, {0, 0}, x,
                       "node " + std::to_string(x) + ": vertex " + std::to_string(u) + " repeated"});
        continue;
      }
      nodes_of[u].push_back(x);
      slots[x].push_back({u, ++flat});
    }
    std::sort(slots[x].begin(), slots[x].end());
    if (td.width && static_cast<int>(in_bag.size()) > *td.width) {
      out.push_back({ViolationKind::kWidth, 0, {0, 0}, x,
                     "node " + std::to_string(x) + ": bag size " + std::to_string(in_bag.size()) +
                         " exceeds width " + std::to_string(*td.width)});
    }
  }

  sets::DisjointSet tree(n);
  sets::DisjointSet members(flat);
  int tree_edges = 0;
  bool cyclic = false;
  for (const auto& [a, b] : td.tree_edges) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) {
      out.push_back({ViolationKind::kInvalidNode, 0, {a, b}, 0, "tree edge " + edge_text(a, b) + " is invalid"});
      continue;
    }
    ++tree_edges;
    if (!tree.unite(a, b)) cyclic = true;
    // Link the two copies of every shared vertex.
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < slots[a].size() && j < slots[b].size()) {
      if (slots[a][i].first < slots[b][j].first) {
        ++i;
      } else if (slots[a][i].first > slots[b][j].first) {
        ++j;
      } else {
        members.unite(slots[a][i++].second, slots[b][j++].second);
      }
    }
  }
  if (n > 0 && (cyclic || tree_edges != n - 1)) {
    out.push_back({ViolationKind::kNotATree, 0, {0, 0}, 0,
                   "decomposition has " + std::to_string(n) + " nodes and " + std::to_string(tree_edges) +
                       " valid edges" + (cyclic ? " with a cycle" : "") + "; expected a tree"});
  }

  std::vector<int> first_slot(p + 1, 0);
  std::vector<int> pieces(p + 1, 0);
  std::set<std::pair<int, int>> counted;
  for (int x = 1; x <= n; ++x) {
    for (const auto& [u, id] : slots[x]) {
      if (counted.insert({u, members.find(id)}).second) ++pieces[u];
    }
  }
  for (int u = 1; u <= p; ++u) {
    if (nodes_of[u].empty()) {
      out.push_back({ViolationKind::kVertexNotCovered, u, {0, 0}, 0,
                     "vertex " + std::to_string(u) + " appears in no bag"});
    } else if (pieces[u] > 1) {
      out.push_back({ViolationKind::kConnectivity, u, {0, 0}, 0,
                     "bags containing vertex " + std::to_string(u) + " form " + std::to_string(pieces[u]) +
                         " disconnected pieces"});
    }
  }

  for (const auto& [u, v] : inst.edges) {
    if (u < 1 || u > p || v < 1 || v > p) continue;
    std::vector<int> both;
    std::set_intersection(nodes_of[u].begin(), nodes_of[u].end(), nodes_of[v].begin(), nodes_of[v].end(),
                          std::back_inserter(both));
    if (both.empty()) {
      out.push_back({ViolationKind::kEdgeNotCovered, 0, {u, v}, 0,
                     "edge " + edge_text(u, v) + " is not contained in any bag"});
    }
  }
  return out;
}

ToggleResult toggle_treewidth_min_cost(const ToggleInstance& inst, const TreeDecomposition& td) {
  validate_instance(inst);
  const auto violations = validate_decomposition(inst, td);
  if (!violations.empty()) {
    std::string msg = "invalid tree decomposition: " + violations.front().message;
    if (violations.size() > 1) msg += " (+" + std::to_string(violations.size() - 1) + " more)";
    throw ValidationError(msg);
  }
  if (td.bags.empty()) return ToggleResult{0, {}};
  return TreewidthSolver(inst, td).solve();
}

}  // namespace resproc::toggle
