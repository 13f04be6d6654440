#pragma once

// Golden CLI fixtures: name.args (one line of arguments), name.in, name.out
// and an optional name.code holding a non-zero exit code.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"

namespace resproc::testing {

struct Fixture {
  std::string name;
  std::vector<std::string> args;
  std::string input;
  std::string expected;
  int expected_code = 0;
};

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
  std::vector<Fixture> all;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".args") continue;
    const auto stem = entry.path().parent_path() / entry.path().stem();
    Fixture f;
    f.name = entry.path().stem().string();
    std::istringstream words(slurp(entry.path()));
    for (std::string w; words >> w;) f.args.push_back(w);
    f.input = slurp(stem.string() + ".in");
    f.expected = slurp(stem.string() + ".out");
    if (std::filesystem::exists(stem.string() + ".code")) f.expected_code = std::stoi(slurp(stem.string() + ".code"));
    all.push_back(std::move(f));
  }
  std::sort(all.begin(), all.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
  return all;
}

inline CliRun run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::vector<std::string> with_oracle(std::vector<std::string> args) {
  if (std::find(args.begin(), args.end(), "--oracle") == args.end()) args.insert(args.begin(), "--oracle");
  return args;
}

}  // namespace resproc::testing
