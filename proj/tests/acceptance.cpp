// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "growthlab/experiment.hpp"
#include "growthlab/groupset.hpp"
#include "growthlab/lemmas.hpp"
#include "growthlab/tori.hpp"

using namespace growthlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

RunResult run_text(const std::string& text) { return run(parse_config(text)); }

Outcome dense_examples() {
  const auto start = Clock::now();
  const RunResult r = run_text(
      "command = construct\nexamples = dense:n=3,q=3; dense:n=4,q=3; dense:n=5,q=3\n");
  Outcome o;
  const std::uint64_t sizes[] = {8, 12, 20};
  const std::uint64_t bounds[] = {344, 624, 1184};
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const Json& j = r.records[i];
    const auto s1 = j["size1"].get<std::uint64_t>();
    const auto s3 = j["size3"].get<std::uint64_t>();
    o.pass = o.pass && j["ok"].get<bool>() && s1 == sizes[i] && j["bound"].get<std::uint64_t>() == bounds[i] &&
             s3 <= bounds[i] && s3 < 100 * s1 && j["generates"].get<bool>();
    o.detail += "n=" + std::to_string(j["n"].get<int>()) + " |A|=" + std::to_string(s1) +
                " |A^3|=" + std::to_string(s3) + " (" + j["generation_method"].get<std::string>() + ") ";
  }
  const double t = seconds_since(start);
  o.pass = o.pass && r.records.size() == 3 && t < 30;
  o.detail += "in " + std::to_string(t) + " s";
  return o;
}

Outcome suite(const std::string& name, std::uint64_t cases, const std::vector<std::string>& groups,
              double limit_s, std::uint64_t seed) {
  const auto start = Clock::now();
  Outcome o;
  for (const auto& g : groups) {
    const SuiteResult r = run_suite(name, cases, seed, g);
    const std::uint64_t checked = r.cases - r.skipped;
    o.pass = o.pass && r.violations == 0 && checked >= std::min<std::uint64_t>(cases, 50);
    o.detail += r.group + ": " + std::to_string(checked) + " checked, " + std::to_string(r.violations) +
                " violations; ";
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t < limit_s;
  o.detail += "in " + std::to_string(t) + " s";
  return o;
}

Outcome torus_partitions() {
  const auto start = Clock::now();
  Outcome o;
  for (int q : {5, 7, 9, 11, 13}) {
    const GroupSpec spec = GroupSpec::parse("SL(2," + std::to_string(q) + ")");
    const TorusPartitionReport rep = verify_torus_partition(spec);
    o.pass = o.pass && rep.ok() && rep.orders_match_kind;
    o.detail += "q=" + std::to_string(q) + (rep.ok() ? " ok " : " FAIL ");
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t < 120;
  o.detail += "in " + std::to_string(t) + " s";
  return o;
}

Outcome diameters() {
  Outcome o;
  double t61 = 0;
  for (int p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    const auto start = Clock::now();
    const RunResult r = run_text("command = diameter\ngroup = SL(2," + std::to_string(p) +
                                 ")\nmethod = both\npolylog_c = 2\n");
    const Json& j = r.records.at(0);
    o.pass = o.pass && j["ok"].get<bool>() && j["agree"].get<bool>() && j["polylog"]["holds"].get<bool>();
    o.detail += std::to_string(p) + ":" + std::to_string(j["diameter_bfs"].get<int>()) + " ";
    if (p == 61) t61 = seconds_since(start);
  }
  o.pass = o.pass && t61 < 60;
  o.detail += "SL(2,61) in " + std::to_string(t61) + " s";
  return o;
}

Outcome pargcd_workload() {
  const auto start = Clock::now();
  const RunResult r = run_text(
      "command = pargcd\nfields = GF(5); GF(7); GF(11)\nparams = 1,2\nmax_degree = 4\nfamilies = 50\nseed = 1\n");
  Outcome o;
  std::uint64_t mismatches = 0, uncovered = 0, overlaps = 0, outside = 0;
  for (const Json& j : r.records) {
    mismatches += j["gcd_mismatches"].get<std::uint64_t>() + j["label_mismatches"].get<std::uint64_t>();
    uncovered += j["uncovered"].get<std::uint64_t>();
    overlaps += j["overlaps"].get<std::uint64_t>();
    outside += j["within_bound"].get<bool>() ? 0 : 1;
  }
  const double t = seconds_since(start);
  o.pass = r.all_ok && r.records.size() == 300 && mismatches + uncovered + overlaps + outside == 0 && t < 120;
  o.detail = std::to_string(r.records.size()) + " families, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(uncovered) + " uncovered, " + std::to_string(overlaps) + " overlaps, " +
             std::to_string(outside) + " over bound, in " + std::to_string(t) + " s";
  return o;
}

Outcome growth_sweep() {
  const auto start = Clock::now();
  const ExperimentConfig c = parse_config("command = sweep\nprimes = 31,61,101\nseed = 1\n");
  const RunResult r = run(c);
  const std::string csv = emit_plot_data(r.records, "trajectory");
  std::cout << csv;
  Outcome o;
  o.pass = r.records.size() == 3;
  o.detail = "trajectory emitted (" + std::to_string(r.records.size()) + " runs) in " +
             std::to_string(seconds_since(start)) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dense examples q=3, n=3..5", dense_examples},
      {"olson suite", [] { return suite("olson", 200, {"SL(2,5)", "SL(2,7)"}, 60, 11); }},
      {"ruzsa suite", [] { return suite("ruzsa", 100, {"SL(2,7)"}, 600, 12); }},
      {"gowers trick", [] { return suite("gowers", 100, {"SL(2,5)"}, 600, 13); }},
      {"torus partitions", torus_partitions},
      {"diameters", diameters},
      {"lemma checkers",
       [] {
         Outcome all;
         for (const char* name : {"coset", "quotient", "schreier", "subgroup_growth", "max_coset", "freiman"}) {
           const Outcome o = suite(name, 100, {""}, 600, 17);
           all.pass = all.pass && o.pass;
           all.detail += std::string(name) + " [" + o.detail + "] ";
         }
         return all;
       }},
      {"pargcd workload", pargcd_workload},
      {"growth sweep report", growth_sweep},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
