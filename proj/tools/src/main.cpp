#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "posetpoly/errors.hpp"
#include "posetpoly/serialize.hpp"

namespace {

using namespace posetpoly;

Poset load(const std::string& path) {
  if (path == "-") {
    const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_poset(text);
  }
  return read_poset_file(path);
}

cli::Format parse_format(const std::string& s) {
  if (s == "json") return cli::Format::Json;
  if (s == "text") return cli::Format::Text;
  throw InvalidInput("--format must be json or text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-polytope analysis of order and chain polytope pairings"};
  app.require_subcommand(1);

  std::string p_file, q_file, kinds = "OO,OC,CC", format = "json", kind = "OC";
  std::vector<std::string> theorems;
  bool no_toric = false, toric = false;
  int degree_cap = cli::AnalyzeOptions{}.degree_cap;
  cli::SweepOptions sweep_options;

  auto* analyze = app.add_subcommand("analyze", "Analyze the polytopes of a poset pair");
  analyze->add_option("P", p_file, "JSON poset file for P ('-' for stdin)")->required();
  analyze->add_option("Q", q_file, "JSON poset file for Q")->required();
  analyze->add_option("--kinds", kinds, "Comma-separated subset of OO,OC,CC");
  analyze->add_flag("--no-toric", no_toric, "Skip the toric ring block");
  analyze->add_option("--degree-cap", degree_cap, "Degree bound of the toric-ideal oracle")->check(CLI::PositiveNumber);
  analyze->add_option("--format", format, "json or text");

  auto* sweep = app.add_subcommand("sweep", "Check every invariant over all labeled poset pairs of size d");
  sweep->add_option("-d,--d", sweep_options.d, "Poset size (2..4)")->required();
  sweep->add_option("--kinds", kinds, "Comma-separated subset of OO,OC,CC");
  sweep->add_option("--theorem", theorems,
                    "Check groups to run: 1.1 1.2 1.4 1.5 2.1 2.2 2.3 3.1 or their names "
                    "(ehrhart groebner hilbert swap cc-smooth oc-smooth oo-smooth equivalence gorenstein stanley)")
      ->delimiter(',');
  sweep->add_flag("--no-toric", no_toric, "Skip toric checks");
  sweep->add_flag("--toric", toric, "Require toric checks (d <= 3)");
  sweep->add_option("--degree-cap", degree_cap, "Degree bound of the toric-ideal oracle")->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", sweep_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--sample", sweep_options.sample, "Evenly strided subset of this many pairs (0: all)");
  sweep->add_option("--pair-timeout", sweep_options.pair_timeout_seconds, "Per-pair budget in seconds (0: none)");
  sweep->add_option("--format", format, "json or text");

  auto* ehrhart_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial of one pairing");
  ehrhart_cmd->add_option("P", p_file, "JSON poset file for P")->required();
  ehrhart_cmd->add_option("Q", q_file, "JSON poset file for Q")->required();
  ehrhart_cmd->add_option("--kind", kind, "OO, OC or CC");
  ehrhart_cmd->add_option("--format", format, "json or text");

  CLI11_PARSE(app, argc, argv);

  try {
    const cli::Format fmt = parse_format(format);
    if (analyze->parsed()) {
      cli::AnalyzeOptions options;
      options.kinds = cli::parse_kinds(kinds);
      options.toric = !no_toric;
      options.degree_cap = degree_cap;
      options.format = fmt;
      return cli::cmd_analyze(load(p_file), load(q_file), options, std::cout);
    }
    if (sweep->parsed()) {
      if (toric && no_toric) throw InvalidInput("--toric and --no-toric are exclusive");
      if (toric && sweep_options.d > 3) throw PreconditionError("toric checks support d <= 3");
      sweep_options.kinds = cli::parse_kinds(kinds);
      sweep_options.theorems.insert(theorems.begin(), theorems.end());
      sweep_options.toric = !no_toric;
      sweep_options.degree_cap = degree_cap;
      sweep_options.format = fmt;
      return cli::cmd_sweep(sweep_options, std::cout);
    }
    if (ehrhart_cmd->parsed()) {
      const PairingKind k = parse_pairing_kind(kind);
      return cli::cmd_ehrhart(load(p_file), load(q_file), k, fmt, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
