#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "command.hpp"
#include "resproc/oracle.hpp"
#include "resproc/ratio_opt.hpp"
#include "resproc/spanning_offers.hpp"
#include "resproc/transfer_routing.hpp"

namespace resproc::cli {
namespace {

int to_int(std::int64_t v, const char* what) {
  if (v < INT32_MIN || v > INT32_MAX) throw ValidationError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

bool close(double a, double b, double scale) { return std::fabs(a - b) <= 1e-9 * std::max(1.0, scale); }

std::vector<ratio::RatioItem> read_items(const Json& j) {
  std::vector<ratio::RatioItem> items;
  const Json& arr = require_array(j, "items");
  for (const Json& it : arr) items.push_back({get_number(it, "p"), get_number(it, "q")});
  return items;
}

ratio::LengthBoundedInstance read_walk_shape(const Json& j, bool priced, bool need_bounds) {
  ratio::LengthBoundedInstance inst;
  inst.n = to_int(get_int(j, "n"), "n");
  for (const Json& a : require_array(j, "arcs")) {
    ratio::WeightedArc arc;
    arc.from = to_int(get_int(a, "from"), "from");
    arc.to = to_int(get_int(a, "to"), "to");
    arc.weight = priced ? 0.0 : get_number(a, "weight");
    arc.length = to_int(get_opt_int(a, "length").value_or(1), "length");
    inst.arcs.push_back(arc);
  }
  if (need_bounds) {
    inst.min_length = to_int(get_int(j, "L"), "L");
    inst.max_length = to_int(get_int(j, "U"), "U");
  }
  return inst;
}

std::optional<ratio::LengthRange> read_segment_bounds(const Json& j, std::size_t n) {
  const auto lo = get_opt_int(j, "Lmin");
  const auto hi = get_opt_int(j, "Lmax");
  if (!lo && !hi) return std::nullopt;
  const std::int64_t a = lo.value_or(1);
  const std::int64_t b = hi.value_or(static_cast<std::int64_t>(n));
  if (a < 1 || b < a || b > static_cast<std::int64_t>(n)) {
    throw ValidationError("segment length bounds must satisfy 1 <= Lmin <= Lmax <= n");
  }
  return ratio::LengthRange{static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

Json indices_1based(std::span<const std::size_t> idx) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

void verify_walk(const ratio::LengthBoundedInstance& inst, const ratio::Walk& w, bool closed) {
  int at = w.start;
  int length = 0;
  double weight = 0.0;
  for (std::size_t i : w.arcs) {
    const ratio::WeightedArc& a = inst.arcs.at(i);
    if (a.from != at) throw std::logic_error("walk replay: arcs do not connect");
    at = a.to;
    length += a.length;
    weight += a.weight;
  }
  if (length != w.length || length < inst.min_length || length > inst.max_length) {
    throw std::logic_error("walk replay: length outside the bounds");
  }
  if (closed && at != w.start) throw std::logic_error("walk replay: walk is not closed");
  if (!close(weight, w.weight, std::fabs(weight))) throw std::logic_error("walk replay: weight differs");
}

Json walk_doc(const ratio::Walk& w) {
  Json doc;
  doc["weight"] = w.weight;
  doc["start"] = w.start;
  doc["arcs"] = indices_1based(w.arcs);
  doc["length"] = w.length;
  return doc;
}

bool small_walk(const ratio::LengthBoundedInstance& inst) {
  return inst.n <= 6 && inst.max_length <= 8 && inst.arcs.size() <= 16;
}

}  // namespace

// --- transfer ---------------------------------------------------------------

Outcome solve_transfer(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const int n = to_int(get_int(j, "n"), "n");
  const int s = to_int(get_int(j, "s"), "s");
  const int d = to_int(get_int(j, "d"), "d");
  const transfer::Time deadline = get_int(j, "T");
  std::vector<transfer::TimedEdge> edges;
  for (const Json& e : require_array(j, "edges")) {
    edges.push_back({to_int(get_int(e, "from"), "from"), to_int(get_int(e, "to"), "to"), get_int(e, "tstart"),
                     get_int(e, "tfinish"), get_int(e, "twait")});
  }
  const transfer::TimedGraph g = transfer::build_schedule(n, edges);
  const transfer::TransferResult r = transfer::min_wait_transfer(g, s, d, deadline);

  Outcome out;
  if (!r.feasible()) {
    out.doc["infeasible"] = true;
    out.infeasible = true;
  } else {
    out.doc["total_wait"] = *r.total_wait;
    out.doc["itinerary"] = Json::array();
    for (const transfer::ItineraryLeg& leg : r.itinerary) {
      out.doc["itinerary"].push_back({{"edge", leg.edge}, {"depart", leg.depart}, {"arrive", leg.arrive}});
    }
    if (opt.verify && transfer::replay_itinerary(g, s, d, deadline, r.itinerary) != r.total_wait) {
      throw std::logic_error("itinerary replay does not reproduce total_wait");
    }
  }
  if (opt.oracle) {
    if (n > 6 || edges.size() > 10) {
      oracle_skipped(out, "transfer oracle supports n <= 6, m <= 10");
    } else {
      const auto expected = oracle::oracle_transfer(n, edges, s, d, deadline);
      oracle_verdict(out, expected == r.total_wait, "total_wait differs from enumeration");
    }
  }
  return out;
}

std::string generate_transfer(Rng& rng, const Options&) {
  const int n = static_cast<int>(rng.uniform(2, 6));
  const int m = static_cast<int>(rng.uniform(0, 10));
  Json j;
  j["n"] = n;
  j["s"] = rng.uniform(1, n);
  j["d"] = rng.uniform(1, n);
  j["T"] = rng.uniform(0, 20);
  j["edges"] = Json::array();
  for (int i = 0; i < m; ++i) {
    const int a = static_cast<int>(rng.uniform(1, n));
    int b = static_cast<int>(rng.uniform(1, n - 1));
    if (b >= a) ++b;
    const std::int64_t ts = rng.uniform(0, 18);
    const std::int64_t tf = rng.uniform(ts + 1, 20);
    j["edges"].push_back({{"from", a}, {"to", b}, {"tstart", ts}, {"tfinish", tf}, {"twait", rng.uniform(0, tf - ts)}});
  }
  return j.dump();
}

// --- ratio ------------------------------------------------------------------

Outcome solve_ratio(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  ratio::RatioSearchOptions so;
  so.objective = opt.objective == "min" ? ratio::Objective::kMinimize : ratio::Objective::kMaximize;
  if (j.contains("eps")) so.relative_eps = get_number(j, "eps");

  std::vector<ratio::RatioItem> items;
  std::unique_ptr<ratio::AdditiveOptimizer> optimizer;
  ratio::LengthBoundedInstance shape;
  std::optional<ratio::LengthRange> bounds;
  const bool walks = opt.prop == "path" || opt.prop == "cycle";
  if (walks) {
    shape = read_walk_shape(j, true, true);
    for (const Json& a : require_array(j, "arcs")) items.push_back({get_number(a, "p"), get_number(a, "q")});
    ratio::validate_instance(shape);
    if (opt.prop == "path") {
      optimizer = std::make_unique<ratio::BoundedPathOptimizer>(shape);
    } else {
      optimizer = std::make_unique<ratio::BoundedCycleOptimizer>(shape);
    }
  } else {
    items = read_items(j);
    if (opt.prop == "one-item") {
      optimizer = std::make_unique<ratio::SingleItemOptimizer>(items.size());
    } else if (opt.prop == "any-nonempty") {
      optimizer = std::make_unique<ratio::NonEmptySubsetOptimizer>(items.size());
    } else {
      if (items.empty()) throw ValidationError("sequence must be non-empty");
      bounds = read_segment_bounds(j, items.size()).value_or(ratio::LengthRange{1, items.size()});
      optimizer = std::make_unique<ratio::SegmentOptimizer>(items.size(), *bounds);
    }
  }
  ratio::validate_items(items);

  Outcome out;
  std::optional<double> found;
  try {
    const ratio::RatioResult r = ratio::ratio_search(items, *optimizer, so);
    found = ratio::selection_ratio(items, r.witness);
    out.doc["ratio"] = *found;
    out.doc["witness"] = indices_1based(r.witness);
    out.doc["iterations"] = r.iterations;
  } catch (const InfeasibleError&) {
    out.doc["infeasible"] = true;
    out.infeasible = true;
  }

  if (opt.oracle) {
    double amax = 0.0;
    double qmin = items.empty() ? 1.0 : items[0].q;
    for (const auto& it : items) {
      amax = std::max(amax, it.p);
      qmin = std::min(qmin, it.q);
    }
    amax /= qmin;
    const double tol = 4 * so.relative_eps * std::max(amax, 1.0);
    std::optional<double> expected;
    if (walks) {
      if (!small_walk(shape) || so.objective == ratio::Objective::kMinimize) {
        oracle_skipped(out, "walk ratio oracle supports maximization with n <= 6, U <= 8, 16 arcs");
        return out;
      }
      expected = oracle::oracle_walk_ratio(shape, items, opt.prop == "cycle");
    } else {
      if (items.size() > 20) {
        oracle_skipped(out, "ratio oracle supports at most 20 items");
        return out;
      }
      oracle::SubsetPredicate accept = [&](std::span<const std::size_t> s) {
        if (opt.prop == "one-item") return s.size() == 1;
        if (opt.prop == "any-nonempty") return true;
        return s.back() - s.front() + 1 == s.size() && s.size() >= bounds->min_length &&
               s.size() <= bounds->max_length;
      };
      try {
        expected = oracle::oracle_ratio(items, accept, so.objective);
      } catch (const InfeasibleError&) {
      }
    }
    const bool agree = expected.has_value() == found.has_value() &&
                       (!expected || std::fabs(*expected - *found) <= tol);
    oracle_verdict(out, agree, "ratio differs from subset enumeration");
  }
  return out;
}

std::string generate_ratio(Rng& rng, const Options&) {
  Json j;
  j["items"] = Json::array();
  const int m = static_cast<int>(rng.uniform(1, 12));
  for (int i = 0; i < m; ++i) j["items"].push_back({{"p", rng.uniform(0, 20)}, {"q", rng.uniform(1, 10)}});
  return j.dump();
}

std::string generate_walk(Rng& rng, const Options& opt) {
  const int n = static_cast<int>(rng.uniform(1, 5));
  const bool priced = opt.command == "ratio";
  const int m = static_cast<int>(rng.uniform(priced ? 1 : 0, 8));
  Json j;
  j["n"] = n;
  j["arcs"] = Json::array();
  for (int i = 0; i < m; ++i) {
    Json a = {{"from", rng.uniform(1, n)}, {"to", rng.uniform(1, n)}};
    if (priced) {
      a["p"] = rng.uniform(0, 10);
      a["q"] = rng.uniform(1, 5);
    } else {
      a["weight"] = rng.uniform(-5, 5);
    }
    a["length"] = rng.uniform(1, 3);
    j["arcs"].push_back(a);
  }
  const std::int64_t u = rng.uniform(priced ? 1 : 0, 6);
  j["L"] = rng.uniform(priced ? 1 : 0, u);
  j["U"] = u;
  return j.dump();
}

// --- walks and segments -----------------------------------------------------

Outcome solve_maxpath(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const bool bounded = j.contains("L") || j.contains("U");
  const ratio::LengthBoundedInstance inst = read_walk_shape(j, false, bounded);
  Outcome out;
  if (!bounded) {
    const auto r = ratio::unbounded_max_weight(inst.n, inst.arcs);
    std::optional<double> path;
    if (std::holds_alternative<ratio::PlusInfinity>(r)) {
      out.doc["plus_infinity"] = true;
    } else {
      path = std::get<ratio::UnboundedWeights>(r).path_weight;
      out.doc["path_weight"] = *path;
      out.doc["cycle_weight"] = std::get<ratio::UnboundedWeights>(r).cycle_weight;
    }
    if (opt.oracle) {
      if (inst.n > 8) {
        oracle_skipped(out, "cycle enumeration supports n <= 8");
      } else if (oracle::oracle_has_positive_cycle(inst.n, inst.arcs)) {
        oracle_verdict(out, !path, "positive cycle missed");
      } else {
        const double best = oracle::oracle_best_simple_path(inst.n, inst.arcs);
        oracle_verdict(out, path && close(*path, best, std::fabs(best)), "path weight differs from enumeration");
      }
    }
    return out;
  }
  const auto w = ratio::max_weight_path_bounded(inst);
  if (w) {
    out.doc = walk_doc(*w);
    if (opt.verify) verify_walk(inst, *w, false);
  } else {
    out.doc["none"] = true;
    out.infeasible = true;
  }
  if (opt.oracle) {
    if (!small_walk(inst)) {
      oracle_skipped(out, "walk enumeration supports n <= 6, U <= 8, 16 arcs");
    } else {
      const auto expected = oracle::oracle_max_walk(inst);
      oracle_verdict(out,
                     expected.has_value() == w.has_value() &&
                         (!expected || close(*expected, w->weight, std::fabs(*expected))),
                     "walk weight differs from enumeration");
    }
  }
  return out;
}

Outcome solve_maxcycle(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  const ratio::LengthBoundedInstance inst = read_walk_shape(j, false, true);
  Outcome out;
  const auto w = ratio::max_weight_cycle_bounded(inst);
  if (w) {
    out.doc = walk_doc(*w);
    if (opt.verify) verify_walk(inst, *w, true);
  } else {
    out.doc["none"] = true;
    out.infeasible = true;
  }
  if (opt.oracle) {
    if (!small_walk(inst)) {
      oracle_skipped(out, "walk enumeration supports n <= 6, U <= 8, 16 arcs");
    } else {
      const auto expected = oracle::oracle_max_closed_walk(inst);
      oracle_verdict(out,
                     expected.has_value() == w.has_value() &&
                         (!expected || close(*expected, w->weight, std::fabs(*expected))),
                     "cycle weight differs from enumeration");
    }
  }
  return out;
}

Outcome solve_maxsegment(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  std::vector<double> seq;
  const Json& arr = require_array(j, "seq");
  for (std::size_t i = 0; i < arr.size(); ++i) seq.push_back(as_number(arr[i], "seq[" + std::to_string(i) + "]"));
  if (seq.empty()) throw ValidationError("sequence must be non-empty");
  const auto bounds = read_segment_bounds(j, seq.size());
  const ratio::Segment s = ratio::max_sum_segment(seq, bounds);
  Outcome out;
  out.doc["sum"] = s.sum;
  out.doc["segment"] = s.empty() ? Json(nullptr) : Json::array({s.first, s.last});
  if (opt.verify && !s.empty()) {
    double sum = 0.0;
    for (std::size_t i = s.first; i <= s.last; ++i) sum += seq[i - 1];
    if (!close(sum, s.sum, std::fabs(sum))) throw std::logic_error("segment replay: sum differs");
  }
  if (opt.oracle) {
    if (seq.size() > 5000) {
      oracle_skipped(out, "segment scan supports n <= 5000");
    } else {
      const auto expected = oracle::oracle_max_segment(seq, bounds);
      oracle_verdict(out, expected && close(*expected, s.sum, std::fabs(*expected)), "sum differs from scan");
    }
  }
  return out;
}

std::string generate_segment(Rng& rng, const Options& opt) {
  const int n = static_cast<int>(rng.uniform(1, 12));
  Json j;
  const bool priced = opt.command == "ratio";
  const char* key = priced ? "items" : "seq";
  j[key] = Json::array();
  for (int i = 0; i < n; ++i) {
    if (priced) {
      j[key].push_back({{"p", rng.uniform(0, 20)}, {"q", rng.uniform(1, 10)}});
    } else {
      j[key].push_back(rng.uniform(-10, 10));
    }
  }
  if (rng.coin()) {
    const std::int64_t hi = rng.uniform(1, n);
    j["Lmin"] = rng.uniform(1, hi);
    j["Lmax"] = hi;
  }
  return j.dump();
}

// --- spanning trees with offers --------------------------------------------

Outcome solve_mst_offers(const Options& opt, const std::string& input) {
  const Json j = parse_json(input);
  mst::OfferGraph g;
  g.n = to_int(get_int(j, "n"), "n");
  g.owners = to_int(get_int(j, "q"), "q");
  for (const Json& e : require_array(j, "edges")) {
    g.edges.push_back({to_int(get_int(e, "a"), "a"), to_int(get_int(e, "b"), "b"), to_int(get_int(e, "owner"), "owner"),
                       get_int(e, "np"), get_int(e, "sp")});
  }
  mst::validate_graph(g);
  const mst::OfferMstResult r = mst::best_offer_mst(g);
  Outcome out;
  if (!r.connected()) {
    out.doc["disconnected"] = true;
    out.infeasible = true;
  } else {
    out.doc["best_cost"] = *r.best_cost;
    out.doc["chosen_offer"] = r.chosen_offer ? Json(*r.chosen_offer) : Json(nullptr);
    out.doc["tree_edges"] = r.tree_edges;
    if (opt.verify) {
      Cost total = 0;
      std::vector<int> comp(g.n + 1);
      for (int v = 1; v <= g.n; ++v) comp[v] = v;
      auto find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
      };
      for (int id : r.tree_edges) {
        const mst::OfferEdge& e = g.edges.at(id - 1);
        if (find(e.a) == find(e.b)) throw std::logic_error("tree replay: edges form a cycle");
        comp[find(e.a)] = find(e.b);
        total += mst::edge_price(g, id, r.chosen_offer);
      }
      if (static_cast<int>(r.tree_edges.size()) != g.n - 1 || total != *r.best_cost) {
        throw std::logic_error("tree replay: not a spanning tree of the reported cost");
      }
    }
  }
  if (opt.oracle) {
    if (g.n > 2000) {
      oracle_skipped(out, "Prim oracle supports n <= 2000");
    } else {
      oracle_verdict(out, oracle::oracle_offer_mst(g) == r.best_cost, "cost differs from per-offer Prim");
    }
  }
  return out;
}

std::string generate_mst_offers(Rng& rng, const Options&) {
  const int n = static_cast<int>(rng.uniform(1, 6));
  const int q = static_cast<int>(rng.uniform(1, 4));
  const int m = n < 2 ? 0 : static_cast<int>(rng.uniform(0, 12));
  Json j;
  j["n"] = n;
  j["q"] = q;
  j["edges"] = Json::array();
  for (int i = 0; i < m; ++i) {
    const int a = static_cast<int>(rng.uniform(1, n));
    int b = static_cast<int>(rng.uniform(1, n - 1));
    if (b >= a) ++b;
    const std::int64_t np = rng.uniform(0, 20);
    j["edges"].push_back({{"a", a}, {"b", b}, {"owner", rng.uniform(1, q)}, {"np", np}, {"sp", rng.uniform(0, np)}});
  }
  return j.dump();
}

}  // namespace resproc::cli
