#include <algorithm>
#include <stdexcept>

#include "command.hpp"
#include "resproc/oracle.hpp"
#include "resproc/perm_sort.hpp"

namespace resproc::cli {
namespace {

Json script_steps(const perm::OpScript& s) {
  Json steps = Json::array();
  for (const perm::ScriptStep& step : s.steps) {
    if (const auto* r = std::get_if<perm::RotationStep>(&step)) {
      steps.push_back({{"split", r->split}, {"left", r->left_shift}, {"right", r->right_shift}});
    } else if (const auto* v = std::get_if<perm::ReversalStep>(&step)) {
      steps.push_back(v->position);
    } else if (const auto* w = std::get_if<perm::SwapStep>(&step)) {
      steps.push_back({w->i, w->j});
    } else if (const auto* a = std::get_if<perm::AdjacentSwapStep>(&step)) {
      steps.push_back(a->i);
    } else if (const auto* m = std::get_if<perm::MoveStep>(&step)) {
      steps.push_back({m->from, m->to});
    }
  }
  return steps;
}

void put_script(Json& doc, const perm::OpScript& s) {
  doc["kind"] = perm::script_kind_name(s.kind);
  if (s.kind == perm::ScriptKind::kRotationV1) doc["case"] = s.rotation_case;
  doc["steps"] = script_steps(s);
  doc["elementary"] = s.elementary_operations();
}

std::vector<int> sorted_copy(std::vector<int> a) {
  std::sort(a.begin(), a.end());
  return a;
}

void verify_sorts(std::span<const int> p, const perm::OpScript& s) {
  const std::vector<int> start(p.begin(), p.end());
  if (perm::apply_script(start, s) != sorted_copy(start)) throw std::logic_error("script replay does not sort");
}

bool replay_sorts(std::span<const int> p, const perm::OpScript& s) {
  const std::vector<int> start(p.begin(), p.end());
  return oracle::oracle_replay(start, s).first == sorted_copy(start);
}

constexpr std::size_t kSearchCap = oracle::kMaxStateSearchLength;

Json to_json(std::span<const int> v) { return Json(std::vector<int>(v.begin(), v.end())); }

}  // namespace

Outcome solve_avgfree(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const std::int64_t n = get_int(j, "n");
  if (n < 1 || n > 100'000'000) throw ValidationError("n must be in 1..100000000");
  const auto method = opt.method == "memoized" ? perm::AvgFreeMethod::kMemoized : perm::AvgFreeMethod::kPowerOfTwo;
  const perm::Permutation p = perm::avg_free_permutation(static_cast<int>(n), method);
  Outcome out;
  out.doc["permutation"] = to_json(p.values());
  if (opt.verify && !perm::is_average_free(p.values())) throw std::logic_error("result is not average-free");
  if (opt.oracle) {
    if (n > 512) {
      oracle_skipped(out, "triple checker supports n <= 512");
    } else {
      oracle_verdict(out, oracle::oracle_average_free(p.values()), "an average sits between its operands");
    }
  }
  return out;
}

std::string generate_avgfree(Rng& rng, const Options&) { return Json{{"n", rng.uniform(1, 64)}}.dump(); }

Outcome solve_rotsort1(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const perm::Permutation p(get_int_list(j, "p"));
  const int rc = static_cast<int>(get_opt_int(j, "case").value_or(opt.rotation_case));
  if (rc != 1 && rc != 2) throw ValidationError("case must be 1 or 2");
  const perm::OpScript s = perm::sort_by_rotations_v1(p, rc);
  Outcome out;
  put_script(out.doc, s);
  if (opt.verify) verify_sorts(p.values(), s);
  if (opt.oracle) {
    const auto [final_state, steps] = oracle::oracle_replay({p.values().begin(), p.values().end()}, s);
    const std::int64_t n = p.size();
    oracle_verdict(out, final_state == sorted_copy(final_state) && steps == s.elementary_operations() && steps <= 4 * n * n,
                   "unit-step replay does not sort within 4n^2 rotations");
  }
  return out;
}

Outcome solve_rotsort2(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const perm::Permutation p(get_int_list(j, "p"));
  const perm::OpScript s = perm::sort_by_rotations_v2(p);
  Outcome out;
  put_script(out.doc, s);
  if (opt.verify) verify_sorts(p.values(), s);
  if (opt.oracle) {
    oracle_verdict(out, replay_sorts(p.values(), s) && s.steps.size() <= 3 * static_cast<std::size_t>(p.size()) + 2,
                   "reversal replay does not sort within 3n+2 steps");
  }
  return out;
}

std::string generate_permutation(Rng& rng, const Options&) {
  return Json{{"p", rng.permutation(static_cast<int>(rng.uniform(1, 7)))}}.dump();
}

Outcome solve_swapsort(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const perm::Permutation p(get_int_list(j, "p"));
  const auto allowed = get_pair_list(j, "allowed");
  for (auto [a, b] : allowed) {
    if (a < 1 || a > p.size() || b < 1 || b > p.size()) throw ValidationError("allowed pair out of range");
  }
  const auto s = perm::sort_by_allowed_swaps(p, allowed);
  Outcome out;
  if (!s) {
    out.doc["impossible"] = true;
    out.infeasible = true;
  } else {
    put_script(out.doc, *s);
    if (opt.verify) verify_sorts(p.values(), *s);
  }
  if (opt.oracle) {
    if (static_cast<std::size_t>(p.size()) > kSearchCap) {
      oracle_skipped(out, "state search supports n <= 8");
    } else {
      const bool reachable = oracle::oracle_sortable_with_swaps({p.values().begin(), p.values().end()}, allowed);
      bool valid = s.has_value() == reachable;
      if (s) {
        for (const perm::ScriptStep& step : s->steps) {
          const auto& w = std::get<perm::SwapStep>(step);
          valid = valid && std::any_of(allowed.begin(), allowed.end(), [&](auto pr) {
                    return std::minmax(pr.first, pr.second) == std::minmax(w.i, w.j);
                  });
        }
        valid = valid && replay_sorts(p.values(), *s);
      }
      oracle_verdict(out, valid, "swap script or impossibility verdict disagrees with reachability");
    }
  }
  return out;
}

std::string generate_swapsort(Rng& rng, const Options&) {
  const int n = static_cast<int>(rng.uniform(1, 8));
  Json j{{"p", rng.permutation(n)}, {"allowed", Json::array()}};
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (rng.uniform(0, 3) == 0) j["allowed"].push_back({a, b});
    }
  }
  return j.dump();
}

Outcome solve_cyclesort(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const perm::Permutation p(get_int_list(j, "p"));
  const std::vector<Cost> costs = get_int64_list(j, "c");
  if (costs.size() != static_cast<std::size_t>(p.size())) throw ValidationError("c must have one cost per value");
  for (Cost c : costs) {
    if (c <= 0) throw ValidationError("costs must be positive");
  }
  const perm::CycleSortResult r = perm::min_cost_cycle_sort(p, costs);
  Outcome out;
  out.doc["total_cost"] = r.total_cost;
  put_script(out.doc, r.script);
  if (opt.verify) {
    verify_sorts(p.values(), r.script);
    if (perm::swap_script_cost(p, costs, r.script) != r.total_cost) throw std::logic_error("script cost differs");
  }
  if (opt.oracle) {
    if (static_cast<std::size_t>(p.size()) > kSearchCap) {
      oracle_skipped(out, "state search supports n <= 8");
    } else {
      const auto expected = oracle::oracle_value_cost_sort({p.values().begin(), p.values().end()}, costs);
      oracle_verdict(out, expected == r.total_cost, "cost differs from uniform-cost search");
    }
  }
  return out;
}

std::string generate_cyclesort(Rng& rng, const Options&) {
  const int n = static_cast<int>(rng.uniform(1, 6));
  static constexpr int kCosts[] = {1, 2, 5, 10};
  std::vector<int> c;
  for (int i = 0; i < n; ++i) c.push_back(kCosts[rng.uniform(0, 3)]);
  return Json{{"p", rng.permutation(n)}, {"c", c}}.dump();
}

Outcome solve_circsort(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const perm::MultiPermutation p(get_int_list(j, "p"));
  const perm::CircularSortResult r = perm::circular_multiperm_sort(p);
  Outcome out;
  out.doc["ni"] = r.swaps;
  out.doc["ci"] = r.cost;
  out.doc["rotation"] = r.rotation;
  out.doc["shift"] = r.shift;
  if (opt.oracle) {
    const std::vector<int> values(p.values().begin(), p.values().end());
    if (values.size() > 2000) {
      oracle_skipped(out, "formula oracle supports n <= 2000");
      return out;
    }
    const auto formula = oracle::oracle_circular_formula(values);
    oracle_verdict(out, formula == std::pair{r.swaps, r.cost}, "(ni, ci) differs from the direct formula");
    if (values.size() <= kSearchCap) {
      const auto [swaps, dist] = oracle::oracle_circular_swaps(values);
      out.doc["oracle_min_swaps"] = {swaps, dist};
      if (swaps != r.swaps) out.notes.push_back("finding: ni exceeds the true minimum swap count");
    }
  }
  return out;
}

std::string generate_multiperm(Rng& rng, const Options&) {
  const int n = static_cast<int>(rng.uniform(1, 8));
  const int k = static_cast<int>(rng.uniform(1, std::min(n, 4)));
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i < k ? i + 1 : static_cast<int>(rng.uniform(1, k));
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform(0, i)]);
  return Json{{"p", p}}.dump();
}

Outcome solve_adjswaps(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const perm::MultiPermutation p(get_int_list(j, "p"));
  const perm::MultiPermutation q(get_int_list(j, "q"));
  Outcome out;
  perm::AdjacentSwapResult r;
  bool capped = false;
  try {
    r = perm::min_adjacent_swaps(p, q, opt.script);
  } catch (const CapacityError&) {
    r = perm::min_adjacent_swaps(p, q, false);
    capped = true;
  }
  out.doc["count"] = r.count;
  if (opt.script) {
    out.doc["steps"] = r.script ? script_steps(*r.script) : Json(nullptr);
    if (capped) out.notes.push_back("script omitted: more than 10^7 steps");
    if (opt.verify && r.script) {
      const std::vector<int> start(p.values().begin(), p.values().end());
      const std::vector<int> target(q.values().begin(), q.values().end());
      if (perm::apply_script(start, *r.script) != target) throw std::logic_error("script replay misses q");
    }
  }
  if (opt.oracle) {
    if (static_cast<std::size_t>(p.size()) > kSearchCap) {
      oracle_skipped(out, "state search supports n <= 8");
    } else {
      const auto expected = oracle::oracle_adjacent_swaps({p.values().begin(), p.values().end()},
                                                          {q.values().begin(), q.values().end()});
      oracle_verdict(out, expected == r.count, "count differs from breadth-first search");
    }
  }
  return out;
}

std::string generate_adjswaps(Rng& rng, const Options& opt) {
  Json j = parse_json(generate_multiperm(rng, opt));
  std::vector<int> q = j["p"].get<std::vector<int>>();
  for (int i = static_cast<int>(q.size()) - 1; i > 0; --i) std::swap(q[i], q[rng.uniform(0, i)]);
  j["q"] = q;
  return j.dump();
}

Outcome solve_group(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const perm::MultiPermutation p(get_int_list(j, "p"));
  const auto method = opt.method == "sjt" ? perm::GroupingMethod::kSjt : perm::GroupingMethod::kBitmask;
  const perm::GroupingResult r = perm::group_identical_min_swaps(p, method);
  Outcome out;
  out.doc["count"] = r.count;
  out.doc["order"] = r.order;
  if (opt.verify && perm::grouping_cost(perm::pair_order_counts(p), r.order) != r.count) {
    throw std::logic_error("order does not achieve the reported count");
  }
  if (opt.oracle) {
    if (static_cast<std::size_t>(p.size()) > kSearchCap) {
      oracle_skipped(out, "state search supports n <= 8");
    } else {
      const auto expected = oracle::oracle_group_min_swaps({p.values().begin(), p.values().end()});
      oracle_verdict(out, expected == r.count, "count differs from breadth-first search");
    }
  }
  return out;
}

Outcome solve_movesort(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const perm::Permutation p(get_int_list(j, "p"));
  Outcome out;
  out.doc["total_cost"] = perm::move_sort_min_cost(p);
  if (opt.oracle) {
    if (static_cast<std::size_t>(p.size()) > kSearchCap) {
      oracle_skipped(out, "state search supports n <= 8");
    } else {
      const auto expected = oracle::oracle_move_sort({p.values().begin(), p.values().end()});
      oracle_verdict(out, expected == out.doc["total_cost"].get<Cost>(), "cost differs from least-cost search");
    }
  }
  return out;
}

}  // namespace resproc::cli
