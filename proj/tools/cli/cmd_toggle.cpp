#include <stdexcept>

#include "command.hpp"
#include "resproc/oracle.hpp"
#include "resproc/toggle.hpp"

namespace resproc::cli {

Outcome solve_toggle(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const Json& graph = require(j, "graph");
  toggle::ToggleInstance inst;
  inst.p = static_cast<int>(get_int(graph, "p"));
  inst.edges = get_pair_list(graph, "edges");
  inst.initial = get_int_list(j, "I");
  inst.target = get_int_list(j, "F");
  inst.cost = get_int64_list(j, "C");
  toggle::validate_instance(inst);

  Outcome out;
  toggle::ToggleResult r;
  if (j.contains("decomposition")) {
    const Json& dj = j.at("decomposition");
    toggle::TreeDecomposition td;
    for (const Json& bag : require_array(dj, "bags")) {
      std::vector<int> b;
      for (const Json& v : bag) b.push_back(static_cast<int>(as_int(v, "bag vertex")));
      td.bags.push_back(std::move(b));
    }
    td.tree_edges = get_pair_list(dj, "tree_edges");
    if (auto w = get_opt_int(dj, "width")) td.width = static_cast<int>(*w);
    const auto violations = toggle::validate_decomposition(inst, td);
    if (!violations.empty()) {
      out.doc["error"] = "validation";
      out.doc["message"] = "invalid tree decomposition";
      out.doc["violations"] = Json::array();
      for (const toggle::Violation& v : violations) {
        Json item;
        item["kind"] = toggle::violation_kind_name(v.kind);
        if (v.vertex) item["vertex"] = v.vertex;
        if (v.edge.first) item["edge"] = {v.edge.first, v.edge.second};
        if (v.node) item["node"] = v.node;
        item["message"] = v.message;
        out.doc["violations"].push_back(item);
      }
      out.validation_failed = true;
      return out;
    }
    r = toggle::toggle_treewidth_min_cost(inst, td);
  } else {
    r = toggle::toggle_tree_min_cost(inst);
  }

  if (!r.feasible()) {
    out.doc["infeasible"] = true;
    out.infeasible = true;
  } else {
    out.doc["min_cost"] = *r.min_cost;
    out.doc["selection"] = r.selection;
    if (opt.verify && (toggle::apply_selection(inst, r.selection) != inst.target ||
                       toggle::selection_cost(inst, r.selection) != *r.min_cost)) {
      throw std::logic_error("selection replay does not reach F at the reported cost");
    }
  }
  if (opt.oracle) {
    if (inst.p > toggle::kMaxBruteForceVertices) {
      oracle_skipped(out, "brute force supports p <= 24");
    } else {
      oracle_verdict(out, oracle::oracle_toggle(inst).min_cost == r.min_cost, "cost differs from brute force");
    }
  }
  return out;
}

std::string generate_toggle(Rng& rng, const Options&) {
  const int p = static_cast<int>(rng.uniform(1, 12));
  Json j;
  j["graph"] = {{"p", p}, {"edges", Json::array()}};
  for (int v = 2; v <= p; ++v) {
    if (rng.uniform(0, 5) > 0) j["graph"]["edges"].push_back({rng.uniform(1, v - 1), v});
  }
  std::vector<int> i(p), f(p), c(p);
  for (int v = 0; v < p; ++v) {
    i[v] = static_cast<int>(rng.uniform(0, 1));
    f[v] = static_cast<int>(rng.uniform(0, 1));
    c[v] = static_cast<int>(rng.uniform(0, 7));
  }
  j["I"] = i;
  j["F"] = f;
  j["C"] = c;
  return j.dump();
}

}  // namespace resproc::cli
