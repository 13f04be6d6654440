#include "cli.hpp"

#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "command.hpp"
#include "resproc/common.hpp"

namespace resproc::cli {
namespace {

using Solver = Outcome (*)(const Options&, const std::string&);
using Generator = std::string (*)(Rng&, const Options&);

struct Command {
  const char* name;
  const char* help;
  Solver solve;
  Generator generate;
};

Generator ratio_generator(const Options& o) {
  if (o.prop == "path" || o.prop == "cycle") return generate_walk;
  if (o.prop == "segment") return generate_segment;
  return generate_ratio;
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"transfer", "minimum-waiting-time transfer over reservation edges", solve_transfer, generate_transfer},
      {"ratio", "maximum (or minimum) ratio selection", solve_ratio, generate_ratio},
      {"maxpath", "max-weight walk with length bounds, or unbounded analysis", solve_maxpath, generate_walk},
      {"maxcycle", "max-weight closed walk with length bounds", solve_maxcycle, generate_walk},
      {"maxsegment", "max-sum contiguous segment", solve_maxsegment, generate_segment},
      {"mst-offers", "spanning tree with at most one special offer", solve_mst_offers, generate_mst_offers},
      {"avgfree", "average-free permutation of 1..n", solve_avgfree, generate_avgfree},
      {"rotsort1", "sort with split rotations", solve_rotsort1, generate_permutation},
      {"rotsort2", "sort with double reversals", solve_rotsort2, generate_permutation},
      {"swapsort", "sort with allowed position swaps", solve_swapsort, generate_swapsort},
      {"cyclesort", "min-cost sort with per-value swap costs", solve_cyclesort, generate_cyclesort},
      {"circsort", "circular sort of a multi-permutation", solve_circsort, generate_multiperm},
      {"adjswaps", "adjacent-swap distance between multi-permutations", solve_adjswaps, generate_adjswaps},
      {"group", "group identical values with adjacent swaps", solve_group, generate_multiperm},
      {"movesort", "min-cost sort with Move(i,j) priced i+j", solve_movesort, generate_permutation},
      {"sets", "ordered union-find and split-find scripts", solve_sets, generate_sets},
      {"toggle", "min-cost toggling on trees or tree decompositions", solve_toggle, generate_toggle},
  };
  return table;
}

void write_plain(std::ostream& out, const Json& doc) {
  for (const auto& [key, value] : doc.items()) {
    out << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

void write_error(std::ostream& out, Format format, const char* kind, const std::string& message) {
  Json doc;
  doc["error"] = kind;
  doc["message"] = message;
  if (format == Format::kPlain) {
    write_plain(out, doc);
  } else {
    out << doc.dump() << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string format = "auto";
  CLI::App app{"Offline optimization solvers with brute-force cross-checks", "resproc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--oracle", opt.oracle, "cross-check the result with a brute-force oracle");
  app.add_flag("--verify", opt.verify, "replay scripts and selections before printing");
  app.add_flag("--strict", opt.strict, "exit 3 on infeasible or impossible results");
  app.add_option("--seed", opt.seed, "solve a random instance generated from this seed");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"auto", "json", "plain"}));

  std::map<std::string, CLI::App*> subs;
  for (const Command& c : commands()) subs[c.name] = app.add_subcommand(c.name, c.help);
  subs["ratio"]
      ->add_option("--prop", opt.prop, "selection property")
      ->check(CLI::IsMember({"one-item", "any-nonempty", "path", "cycle", "segment"}));
  subs["ratio"]->add_option("--objective", opt.objective)->check(CLI::IsMember({"max", "min"}));
  subs["avgfree"]->add_option("--method", opt.method)->check(CLI::IsMember({"power-of-two", "memoized"}));
  subs["rotsort1"]->add_option("--case", opt.rotation_case)->check(CLI::IsMember({1, 2}));
  subs["adjswaps"]->add_flag("--script", opt.script, "also emit the swap script");
  subs["group"]->add_option("--method", opt.method)->check(CLI::IsMember({"sjt", "bitmask"}));
  subs["sets"]
      ->add_option("--mode", opt.mode)
      ->check(CLI::IsMember({"online-inv", "online-comm", "offline", "splitfind"}));
  subs["sets"]->add_option("--agg", opt.agg)->check(CLI::IsMember({"sum", "xor", "max", "min", "prod"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  opt.format = format == "json" ? Format::kJson : format == "plain" ? Format::kPlain : Format::kAuto;
  const Command* cmd = nullptr;
  for (const Command& c : commands()) {
    if (subs[c.name]->parsed()) cmd = &c;
  }
  opt.command = cmd->name;

  Outcome result;
  try {
    std::string input;
    if (opt.seed) {
      Rng rng(*opt.seed);
      const Generator gen = opt.command == "ratio" ? ratio_generator(opt) : cmd->generate;
      input = gen(rng, opt);
    } else {
      input.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    result = cmd->solve(opt, input);
    if (opt.seed && !result.line_protocol) {
      Json with_instance;
      with_instance["instance"] = parse_json(input);
      for (const auto& [key, value] : result.doc.items()) with_instance[key] = value;
      result.doc = std::move(with_instance);
    } else if (opt.seed) {
      std::vector<std::string> lines;
      std::istringstream script(input);
      Json with_script;
      with_script["script"] = Json::array();
      for (std::string line; std::getline(script, line);) {
        lines.push_back("# " + line);
        with_script["script"].push_back(line);
      }
      for (const auto& [key, value] : result.doc.items()) with_script[key] = value;
      result.doc = std::move(with_script);
      lines.insert(lines.end(), result.lines.begin(), result.lines.end());
      result.lines = std::move(lines);
    }
  } catch (const ValidationError& e) {
    write_error(out, opt.format, "validation", e.what());
    return kExitValidation;
  } catch (const CapacityError& e) {
    write_error(out, opt.format, "capacity", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    write_error(out, opt.format, "internal", e.what());
    return kExitInternal;
  }

  const bool plain = opt.format == Format::kPlain || (opt.format == Format::kAuto && result.line_protocol);
  if (result.line_protocol && plain) {
    for (const std::string& line : result.lines) out << line << '\n';
  } else if (plain) {
    write_plain(out, result.doc);
  } else {
    out << result.doc.dump() << '\n';
  }
  for (const std::string& note : result.notes) err << note << '\n';

  if (result.validation_failed) return kExitValidation;
  if (result.oracle_mismatch) return kExitOracleMismatch;
  if (result.infeasible && opt.strict) return kExitInfeasible;
  return kExitOk;
}

}  // namespace resproc::cli
