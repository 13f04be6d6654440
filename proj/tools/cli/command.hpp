#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace resproc::cli {

using Json = nlohmann::ordered_json;

enum class Format { kAuto, kJson, kPlain };

struct Options {
  std::string command;
  bool oracle = false;
  bool verify = false;
  bool strict = false;
  std::optional<std::uint64_t> seed;
  Format format = Format::kAuto;

  std::string prop = "one-item";
  std::string objective = "max";
  std::string mode = "online-inv";
  std::string agg = "sum";
  std::string method;
  int rotation_case = 1;
  bool script = false;
};

struct Outcome {
  Json doc = Json::object();
  std::vector<std::string> lines;  // line protocol (sets only)
  bool line_protocol = false;
  bool infeasible = false;
  bool oracle_mismatch = false;
  bool validation_failed = false;  // doc carries the diagnostics
  std::vector<std::string> notes;  // written to stderr
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Modulo reduction keeps the stream identical across standard libraries.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool coin() { return (engine_() & 1u) != 0; }
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform(0, i)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

// JSON field access that reports missing or mistyped fields as ValidationError.
const Json& require(const Json& j, const char* key);
std::int64_t get_int(const Json& j, const char* key);
std::optional<std::int64_t> get_opt_int(const Json& j, const char* key);
double get_number(const Json& j, const char* key);
std::int64_t as_int(const Json& v, const std::string& what);
double as_number(const Json& v, const std::string& what);
std::vector<int> get_int_list(const Json& j, const char* key);
std::vector<std::int64_t> get_int64_list(const Json& j, const char* key);
std::vector<std::pair<int, int>> get_pair_list(const Json& j, const char* key);
const Json& require_array(const Json& j, const char* key);

Json parse_json(const std::string& text);

/// Records an oracle verdict in the document; a mismatch sets the exit status.
void oracle_verdict(Outcome& out, bool agree, const std::string& what);
void oracle_skipped(Outcome& out, const std::string& why);

// One per subcommand family.
Outcome solve_transfer(const Options&, const std::string& input);
Outcome solve_ratio(const Options&, const std::string& input);
Outcome solve_maxpath(const Options&, const std::string& input);
Outcome solve_maxcycle(const Options&, const std::string& input);
Outcome solve_maxsegment(const Options&, const std::string& input);
Outcome solve_mst_offers(const Options&, const std::string& input);
Outcome solve_avgfree(const Options&, const std::string& input);
Outcome solve_rotsort1(const Options&, const std::string& input);
Outcome solve_rotsort2(const Options&, const std::string& input);
Outcome solve_swapsort(const Options&, const std::string& input);
Outcome solve_cyclesort(const Options&, const std::string& input);
Outcome solve_circsort(const Options&, const std::string& input);
Outcome solve_adjswaps(const Options&, const std::string& input);
Outcome solve_group(const Options&, const std::string& input);
Outcome solve_movesort(const Options&, const std::string& input);
Outcome solve_sets(const Options&, const std::string& input);
Outcome solve_toggle(const Options&, const std::string& input);

std::string generate_transfer(Rng&, const Options&);
std::string generate_ratio(Rng&, const Options&);
std::string generate_walk(Rng&, const Options&);
std::string generate_segment(Rng&, const Options&);
std::string generate_mst_offers(Rng&, const Options&);
std::string generate_avgfree(Rng&, const Options&);
std::string generate_permutation(Rng&, const Options&);
std::string generate_swapsort(Rng&, const Options&);
std::string generate_cyclesort(Rng&, const Options&);
std::string generate_multiperm(Rng&, const Options&);
std::string generate_adjswaps(Rng&, const Options&);
std::string generate_sets(Rng&, const Options&);
std::string generate_toggle(Rng&, const Options&);

}  // namespace resproc::cli
