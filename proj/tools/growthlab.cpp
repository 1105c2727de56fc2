#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "growthlab/error.hpp"
#include "growthlab/experiment.hpp"

namespace {

constexpr const char* kCsvHelp =
    "CSV kinds (--csv writes the command's kind):\n"
    "  diameter   ball-profile  radius,size\n"
    "  dichotomy  dichotomy     trial,kind,order,covered,cap_alpha,cap_alpha2,cap_alpha2_regular,mu_T,mu_G\n"
    "  construct  growth-sweep  n,q,size1,size3,bound\n"
    "  growth     growth        trial,size1,size2,size3,exponent\n"
    "  sweep      trajectory    p,trial,step,size,exponent\n"
    "Set sources: preset:NAME, random:SIZE:SEED, example:SPEC, file:PATH or a bare path.\n"
    "Exit status: 0 when every record holds, 1 when some assertion fails, 2 on errors.\n"
    "GROWTHLAB_CAP_BYTES overrides the default memory cap.";

void add_common(CLI::App* sub, growthlab::ExperimentConfig& c, std::string& save) {
  sub->add_option("--group", c.group, "Group literal, e.g. SL(2,7)");
  sub->add_option("--set", c.set, "Set source");
  sub->add_flag("--symmetrize", c.symmetrize, "Add inverses to the loaded set");
  sub->add_option("--trials", c.trials, "Number of trials");
  sub->add_option("--seed", c.seed, "Base seed; trial i uses derive_seed(seed, i)");
  sub->add_option("--threads", c.threads, "Worker threads for trials");
  sub->add_option("--max-elements", c.max_elements, "Set size cap (0 = default)");
  sub->add_option("--memory-cap", c.memory_cap, "Memory cap in bytes (0 = default)");
  sub->add_option("--json", c.json_out, "NDJSON output path ('-' = stdout, '' = none)");
  sub->add_option("--csv", c.csv_out, "CSV plot data path");
  sub->add_option("--save-config", save, "Write the effective config to this path");
}

}  // namespace

int main(int argc, char** argv) {
  using growthlab::ExperimentConfig;
  CLI::App app{"Growth experiments in finite matrix groups"};
  app.footer(kCsvHelp);
  app.require_subcommand(1);

  ExperimentConfig c;
  std::string save;
  std::string config_path;

  auto* growth = app.add_subcommand("growth", "Product-set growth statistics |A|, |A^2|, |A^3|");
  add_common(growth, c, save);
  growth->add_option("--assert-size3-max", c.assert_size3_max, "Fail when |A^3| exceeds this");

  auto* diameter = app.add_subcommand("diameter", "Cayley graph diameter by BFS and bidirectional search");
  add_common(diameter, c, save);
  diameter->add_option("--method", c.method, "bfs, bidir or both")->check(CLI::IsMember({"bfs", "bidir", "both"}));
  diameter->add_option("--polylog-c", c.polylog_c, "Exponent c in diameter <= (ln|G|)^c");

  auto* dichotomy = app.add_subcommand("dichotomy", "Maximal torus coverage and concentration");
  add_common(dichotomy, c, save);
  dichotomy->add_flag("--verify-tori", c.verify_tori, "Also verify the torus partition exhaustively");

  auto* construct = app.add_subcommand("construct", "Slow-growth generating sets");
  add_common(construct, c, save);
  construct->add_option("--example", c.examples, "dense:n=N,q=Q or moderate:n=N,p=P (repeatable)");
  construct->add_option("--out", c.out, "Write the set as a matrix file");

  auto* lemmas = app.add_subcommand("lemmas", "Seeded checks of the finite-group inequalities");
  add_common(lemmas, c, save);
  lemmas->add_option("--suite", c.suite, "Suite name, ';'-separated names, or all");
  lemmas->add_option("--cases", c.cases, "Cases per suite");

  auto* gowers = app.add_subcommand("gowers", "Gowers trick: large symmetric sets have A^3 = G");
  add_common(gowers, c, save);
  gowers->add_option("--size", c.set_size, "Set size (0 = least size meeting the hypothesis)");

  auto* pargcd = app.add_subcommand("pargcd", "Parametric gcd partition, verified pointwise");
  add_common(pargcd, c, save);
  pargcd->add_option("--family", c.family, "Family file; without it random families are generated");
  pargcd->add_option("--fields", c.fields, "Fields for random families");
  pargcd->add_option("--params", c.params, "Parameter counts k for random families");
  pargcd->add_option("--max-degree", c.max_degree, "Largest t-degree of random families");
  pargcd->add_option("--families", c.families, "Random families per field and k");

  auto* sweep = app.add_subcommand("sweep", "alpha -> alpha^3 trajectories in SL(2,p)");
  add_common(sweep, c, save);
  sweep->add_option("--primes", c.primes, "Primes p");
  sweep->add_option("--start-size", c.start_size, "Initial random elements before symmetrizing");
  sweep->add_option("--budget", c.budget, "Multiplication budget per step");

  auto* run = app.add_subcommand("run", "Run a key=value config file");
  run->add_option("config", config_path, "Config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      c = growthlab::read_config_file(config_path);
    } else {
      c.command = app.get_subcommands().front()->get_name();
    }
    if (!save.empty()) {
      std::ofstream(save) << growthlab::format_config(c);
    }
    const auto result = growthlab::run(c);
    if (c.json_out == "-") {
      growthlab::write_ndjson(c, result, std::cout);
    } else if (!c.json_out.empty()) {
      std::ofstream out(c.json_out);
      if (!out) throw growthlab::Error(growthlab::Errc::ConfigError, "cannot write " + c.json_out);
      growthlab::write_ndjson(c, result, out);
    }
    if (!c.csv_out.empty()) {
      const auto kind = growthlab::default_plot_kind(c.command);
      if (kind.empty()) throw growthlab::Error(growthlab::Errc::ConfigError, c.command + " has no plot data");
      std::ofstream out(c.csv_out);
      if (!out) throw growthlab::Error(growthlab::Errc::ConfigError, "cannot write " + c.csv_out);
      out << growthlab::emit_plot_data(result.records, kind);
    }
    return result.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
