#include <map>
#include <sstream>
#include <stdexcept>

#include "command.hpp"
#include "resproc/oracle.hpp"
#include "resproc/ordered_dsu.hpp"
#include "resproc/split_find.hpp"

namespace resproc::cli {
namespace {

constexpr sets::Value kProdModulus = 1'000'000'007;

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (line.words.empty() || line.words[0][0] == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void bad(const Line& line, const std::string& why) {
  throw ValidationError("line " + std::to_string(line.number) + ": " + why);
}

std::int64_t number_at(const Line& line, std::size_t index) {
  if (index >= line.words.size()) bad(line, "missing argument");
  const std::string& w = line.words[index];
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != w.size() || w.empty()) bad(line, "'" + w + "' is not an integer");
  return v;
}

int element_at(const Line& line, std::size_t index, int n) {
  const std::int64_t v = number_at(line, index);
  if (v < 1 || v > n) bad(line, "element " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<int>(v);
}

void expect_arity(const Line& line, std::size_t lo, std::size_t hi) {
  if (line.words.size() < lo || line.words.size() > hi) bad(line, "wrong number of arguments for " + line.words[0]);
}

int read_header(const std::vector<Line>& lines) {
  if (lines.empty() || lines[0].words[0] != "N") throw ValidationError("script must start with 'N n'");
  const std::int64_t n = number_at(lines[0], 1);
  if (n < 1 || n > 100'000'000) bad(lines[0], "n must be in 1..100000000");
  return static_cast<int>(n);
}

// Colors are arbitrary tokens; ids follow first appearance.
class ColorNames {
 public:
  sets::Color intern(const std::string& name) {
    auto [it, fresh] = ids_.try_emplace(name, static_cast<sets::Color>(names_.size()));
    if (fresh) names_.push_back(name);
    return it->second;
  }
  const std::string& name(sets::Color c) const { return names_.at(static_cast<std::size_t>(c)); }

 private:
  std::map<std::string, sets::Color> ids_;
  std::vector<std::string> names_;
};

Outcome run_splitfind(const Options& opt, const std::vector<Line>& lines) {
  const int n = read_header(lines);
  expect_arity(lines[0], 2, 3);
  ColorNames colors;
  const sets::Color initial = colors.intern(lines[0].words.size() > 2 ? lines[0].words[2] : "0");
  sets::SplitFind sf(n, initial);
  std::optional<oracle::NaiveIntervals> naive;
  if (opt.oracle) naive.emplace(n, initial);
  bool agree = true;

  Outcome out;
  out.line_protocol = true;
  out.doc["answers"] = Json::array();
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string& op = line.words[0];
    try {
      if (op == "S") {
        expect_arity(line, 5, 5);
        const int i = element_at(line, 1, n);
        const int k = element_at(line, 2, n);
        const sets::Color left = colors.intern(line.words[3]);
        const sets::Color right = colors.intern(line.words[4]);
        sf.split(i, k, left, right);
        if (naive) agree = naive->split(i, k, left, right) && agree;
      } else if (op == "D" || op == "R") {
        expect_arity(line, 2, 3);
        const int at = element_at(line, 1, n);
        std::optional<sets::Color> recolor;
        if (line.words.size() == 3) recolor = colors.intern(line.words[2]);
        int k = at;
        if (op == "R") {
          if (!sf.starts_interval(at)) bad(line, "no interval starts at " + std::to_string(at));
          k = sf.interval_end(at);
        }
        if (op == "D") {
          sf.undo(k, recolor);
        } else {
          sf.undo_at_start(at, recolor);
        }
        if (naive) agree = naive->undo(k, recolor) && agree;
      } else if (op == "C") {
        expect_arity(line, 2, 2);
        const int i = element_at(line, 1, n);
        const auto c = sf.query(i);
        if (naive) agree = naive->query(i) == c && agree;
        out.lines.push_back(c ? colors.name(*c) : "UNDEFINED");
        out.doc["answers"].push_back(c ? Json(colors.name(*c)) : Json(nullptr));
      } else {
        bad(line, "unknown split-find operation '" + op + "'");
      }
    } catch (const sets::SplitFindError& e) {
      bad(line, e.what());
    }
  }
  if (naive) {
    std::vector<std::tuple<int, int, sets::Color>> parts;
    for (int i = 1; i <= n; i = sf.interval_end(i) + 1) parts.emplace_back(i, sf.interval_end(i), *sf.query(i));
    oracle_verdict(out, agree && parts == naive->intervals(), "split-find diverges from the interval list");
  }
  return out;
}

Outcome run_union_find(const Options& opt, const std::vector<Line>& lines) {
  const int n = read_header(lines);
  expect_arity(lines[0], 2, 2);
  const auto agg = sets::aggregation_by_name(opt.agg);
  std::vector<sets::Value> weights(n, agg->neutral);
  std::size_t idx = 1;
  if (idx < lines.size() && lines[idx].words[0] == "W") {
    const Line& line = lines[idx++];
    expect_arity(line, n + 1, n + 1);
    for (int x = 1; x <= n; ++x) {
      weights[x - 1] = number_at(line, x);
      if (opt.agg == "prod" && (weights[x - 1] < 1 || weights[x - 1] >= kProdModulus)) {
        bad(line, "prod weights must lie in [1, 1000000007)");
      }
    }
  }
  std::vector<sets::SetOp> ops;
  for (; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string& op = line.words[0];
    if (op == "U") {
      expect_arity(line, 4, 4);
      const std::string& side = line.words[3];
      if (side != "L" && side != "R") bad(line, "side must be L or R");
      ops.push_back(sets::UnionOp{element_at(line, 1, n), element_at(line, 2, n),
                                  side == "L" ? sets::Side::kLeft : sets::Side::kRight});
    } else if (op == "Q") {
      expect_arity(line, 2, 2);
      ops.push_back(sets::QueryOp{element_at(line, 1, n)});
    } else {
      bad(line, "unknown union-find operation '" + op + "'");
    }
  }

  std::vector<sets::Value> answers;
  if (opt.mode == "offline") {
    answers = sets::solve_offline(weights, *agg, ops);
  } else {
    const auto variant = opt.mode == "online-inv" ? sets::DsuVariant::kInvertible : sets::DsuVariant::kCommutative;
    answers = sets::run_online(weights, *agg, variant, ops);
  }
  Outcome out;
  out.line_protocol = true;
  out.doc["answers"] = answers;
  for (sets::Value v : answers) out.lines.push_back(std::to_string(v));
  if (opt.oracle) {
    if (n > 64) {
      oracle_skipped(out, "ordered-list oracle supports n <= 64");
    } else {
      oracle_verdict(out, oracle::oracle_ordered_sets(weights, *agg, ops) == answers,
                     "answers differ from the ordered-list oracle");
    }
  }
  return out;
}

}  // namespace

Outcome solve_sets(const Options& opt, const std::string& input) {
  const std::vector<Line> lines = tokenize(input);
  if (opt.mode == "splitfind") return run_splitfind(opt, lines);
  return run_union_find(opt, lines);
}

std::string generate_sets(Rng& rng, const Options& opt) {
  const int n = static_cast<int>(rng.uniform(1, 12));
  const int ops = static_cast<int>(rng.uniform(0, 30));
  std::ostringstream s;
  if (opt.mode == "splitfind") {
    s << "N " << n << " c0\n";
    static const char* kNames[] = {"red", "green", "blue", "c0"};
    // Tracks the live partition so that every generated split and undo is valid.
    oracle::NaiveIntervals shadow(n, 0);
    std::vector<int> history;
    for (int t = 0; t < ops; ++t) {
      const auto parts = shadow.intervals();
      const auto& [a, b, c] = parts[rng.uniform(0, static_cast<std::int64_t>(parts.size()) - 1)];
      const int kind = static_cast<int>(rng.uniform(0, 2));
      if (kind == 0 && a < b) {
        const int k = static_cast<int>(rng.uniform(a, b - 1));
        const int l = static_cast<int>(rng.uniform(0, 3));
        const int r = static_cast<int>(rng.uniform(0, 3));
        shadow.split(a, k, l, r);
        history.push_back(k);
        s << "S " << a << ' ' << k << ' ' << kNames[l] << ' ' << kNames[r] << '\n';
      } else if (kind == 1 && !history.empty() && shadow.undo(history.back())) {
        s << "D " << history.back() << '\n';
        history.pop_back();
      } else {
        s << "C " << rng.uniform(1, n) << '\n';
      }
    }
    return s.str();
  }
  s << "N " << n << "\nW";
  for (int x = 0; x < n; ++x) s << ' ' << (opt.agg == "prod" ? rng.uniform(1, 100) : rng.uniform(0, 100));
  s << '\n';
  for (int t = 0; t < ops; ++t) {
    if (rng.coin()) {
      s << "U " << rng.uniform(1, n) << ' ' << rng.uniform(1, n) << ' ' << (rng.coin() ? 'L' : 'R') << '\n';
    } else {
      s << "Q " << rng.uniform(1, n) << '\n';
    }
  }
  return s.str();
}

}  // namespace resproc::cli
