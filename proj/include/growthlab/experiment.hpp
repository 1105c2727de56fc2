#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace growthlab {

using Json = nlohmann::ordered_json;

/// Everything needed to reproduce one run. The text form is flat key=value,
/// one per line; string lists are ';'-separated and number lists ','-separated.
struct ExperimentConfig {
  /// growth, diameter, dichotomy, construct, lemmas, gowers, pargcd, sweep.
  std::string command;
  /// Group literal; empty picks the command's default.
  std::string group;
  /// preset:NAME | random:SIZE:SEED | example:SPEC | file:PATH (or a bare path).
  std::string set;
  bool symmetrize = false;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  /// 0 keeps the library defaults.
  std::uint64_t max_elements = 0;
  std::uint64_t memory_cap = 0;
  /// "-" is standard output; empty disables.
  std::string json_out = "-";
  std::string csv_out;

  // growth
  std::optional<std::uint64_t> assert_size3_max;
  // diameter
  std::string method = "both";
  double polylog_c = 2.0;
  // construct
  std::vector<std::string> examples;
  std::string out;
  // lemmas
  std::string suite = "all";
  std::uint64_t cases = 50;
  // gowers (0 = least size meeting the hypothesis)
  std::uint64_t set_size = 0;
  // dichotomy
  bool verify_tori = false;
  // pargcd: a family file, or random families over the listed fields and k
  std::string family;
  std::vector<std::string> fields{"GF(5)", "GF(7)", "GF(11)"};
  std::vector<int> params{1, 2};
  int max_degree = 4;
  std::uint64_t families = 50;
  // sweep
  std::vector<std::uint32_t> primes{31, 61, 101};
  std::uint64_t start_size = 4;
  /// Work budget in group multiplications per alpha -> alpha^3 step.
  std::uint64_t budget = 400'000'000;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws ConfigError on unknown keys or malformed values.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig read_config_file(const std::string& path);
std::string format_config(const ExperimentConfig& config);

std::vector<std::string> command_names();

struct RunResult {
  /// One record per case, in case order; each carries "ok".
  std::vector<Json> records;
  bool all_ok = true;
  int exit_code() const { return all_ok ? 0 : 1; }
};

/// Runs the experiment. Cases run on `threads` workers; records come back in
/// case order. Module errors are rethrown with the command name prepended.
RunResult run(const ExperimentConfig& config);

/// Newline-delimited records followed by one {"summary": ...} line.
void write_ndjson(const ExperimentConfig& config, const RunResult& result, std::ostream& out);

/// CSV plot data. Kinds and columns:
///   ball-profile   radius,size
///   dichotomy      trial,kind,order,covered,cap_alpha,cap_alpha2,cap_alpha2_regular,mu_T,mu_G
///   growth-sweep   n,q,size1,size3,bound
///   growth         trial,size1,size2,size3,exponent
///   trajectory     p,trial,step,size,exponent
/// Throws ConfigError for an unknown kind.
std::string emit_plot_data(const std::vector<Json>& records, std::string_view kind);
/// The kind a command's records are plotted as; empty when it has none.
std::string default_plot_kind(std::string_view command);

}  // namespace growthlab
