#include "growthlab/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "growthlab/cayley.hpp"
#include "growthlab/construct.hpp"
#include "growthlab/error.hpp"
#include "growthlab/lemmas.hpp"
#include "growthlab/limits.hpp"
#include "growthlab/pargcd.hpp"
#include "growthlab/tori.hpp"

namespace growthlab {

// ---------------------------------------------------------------------------
// Config text

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (trim_view(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim_view(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw Error(Errc::ConfigError, "bad value '" + std::string(v) + "' for " + std::string(key));
  }
  return out;
}

double parse_double(std::string_view key, std::string_view v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(std::string(v), &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw Error(Errc::ConfigError, "bad value '" + std::string(v) + "' for " + std::string(key));
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(Errc::ConfigError, "bad boolean '" + std::string(v) + "' for " + std::string(key));
}

template <typename T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string format_double(double d) {
  std::ostringstream out;
  out.precision(17);
  out << d;
  return out.str();
}

}  // namespace

std::vector<std::string> command_names() {
  return {"growth", "diameter", "dichotomy", "construct", "lemmas", "gowers", "pargcd", "sweep"};
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto body = trim_view(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::ConfigError, "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key(trim_view(body.substr(0, eq)));
    const std::string_view v = trim_view(body.substr(eq + 1));
    if (key == "command") {
      c.command = v;
    } else if (key == "group") {
      c.group = v;
    } else if (key == "set") {
      c.set = v;
    } else if (key == "symmetrize") {
      c.symmetrize = parse_bool(key, v);
    } else if (key == "trials") {
      c.trials = parse_number<std::uint64_t>(key, v);
    } else if (key == "seed") {
      c.seed = parse_number<std::uint64_t>(key, v);
    } else if (key == "threads") {
      c.threads = parse_number<unsigned>(key, v);
    } else if (key == "max_elements") {
      c.max_elements = parse_number<std::uint64_t>(key, v);
    } else if (key == "memory_cap") {
      c.memory_cap = parse_number<std::uint64_t>(key, v);
    } else if (key == "json_out") {
      c.json_out = v;
    } else if (key == "csv_out") {
      c.csv_out = v;
    } else if (key == "assert_size3_max") {
      if (v.empty()) {
        c.assert_size3_max.reset();
      } else {
        c.assert_size3_max = parse_number<std::uint64_t>(key, v);
      }
    } else if (key == "method") {
      c.method = v;
    } else if (key == "polylog_c") {
      c.polylog_c = parse_double(key, v);
    } else if (key == "examples") {
      c.examples = split(v, ';');
    } else if (key == "out") {
      c.out = v;
    } else if (key == "suite") {
      c.suite = v;
    } else if (key == "cases") {
      c.cases = parse_number<std::uint64_t>(key, v);
    } else if (key == "set_size") {
      c.set_size = parse_number<std::uint64_t>(key, v);
    } else if (key == "verify_tori") {
      c.verify_tori = parse_bool(key, v);
    } else if (key == "family") {
      c.family = v;
    } else if (key == "fields") {
      c.fields = split(v, ';');
    } else if (key == "params") {
      c.params.clear();
      for (const auto& s : split(v, ',')) c.params.push_back(parse_number<int>(key, s));
    } else if (key == "max_degree") {
      c.max_degree = parse_number<int>(key, v);
    } else if (key == "families") {
      c.families = parse_number<std::uint64_t>(key, v);
    } else if (key == "primes") {
      c.primes.clear();
      for (const auto& s : split(v, ',')) c.primes.push_back(parse_number<std::uint32_t>(key, s));
    } else if (key == "start_size") {
      c.start_size = parse_number<std::uint64_t>(key, v);
    } else if (key == "budget") {
      c.budget = parse_number<std::uint64_t>(key, v);
    } else {
      throw Error(Errc::ConfigError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigError, "cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string format_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "command = " << c.command << '\n'
      << "group = " << c.group << '\n'
      << "set = " << c.set << '\n'
      << "symmetrize = " << (c.symmetrize ? "true" : "false") << '\n'
      << "trials = " << c.trials << '\n'
      << "seed = " << c.seed << '\n'
      << "threads = " << c.threads << '\n'
      << "max_elements = " << c.max_elements << '\n'
      << "memory_cap = " << c.memory_cap << '\n'
      << "json_out = " << c.json_out << '\n'
      << "csv_out = " << c.csv_out << '\n'
      << "assert_size3_max = " << (c.assert_size3_max ? std::to_string(*c.assert_size3_max) : "") << '\n'
      << "method = " << c.method << '\n'
      << "polylog_c = " << format_double(c.polylog_c) << '\n'
      << "examples = " << join(c.examples, "; ") << '\n'
      << "out = " << c.out << '\n'
      << "suite = " << c.suite << '\n'
      << "cases = " << c.cases << '\n'
      << "set_size = " << c.set_size << '\n'
      << "verify_tori = " << (c.verify_tori ? "true" : "false") << '\n'
      << "family = " << c.family << '\n'
      << "fields = " << join(c.fields, "; ") << '\n'
      << "params = " << join(c.params, ",") << '\n'
      << "max_degree = " << c.max_degree << '\n'
      << "families = " << c.families << '\n'
      << "primes = " << join(c.primes, ",") << '\n'
      << "start_size = " << c.start_size << '\n'
      << "budget = " << c.budget << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Running

namespace {

SetLimits limits_of(const ExperimentConfig& c) {
  SetLimits l;
  if (c.max_elements) l.max_elements = c.max_elements;
  if (c.memory_cap) l.memory_cap = c.memory_cap;
  return l;
}

// Runs job(i) for i < n on up to `threads` workers; results keep index order.
std::vector<Json> parallel_cases(std::uint64_t n, unsigned threads, const std::function<Json(std::uint64_t)>& job) {
  std::vector<Json> out(n);
  std::vector<std::exception_ptr> errors(n);
  const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(n, 1)));
  auto work = [&](unsigned w) {
    for (std::uint64_t i = w; i < n; i += workers) {
      try {
        out[i] = job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Json rational_json(const Rational& r) { return to_string(r); }

std::string group_or(const ExperimentConfig& c, const char* fallback) {
  return c.group.empty() ? std::string(fallback) : c.group;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

// Resolves a set source for one trial.
GenSet load_set(const GroupSpec& spec, const ExperimentConfig& c, std::string_view source, std::uint64_t trial) {
  GenSet out = GenSet::empty(spec);
  if (starts_with(source, "preset:")) {
    out = standard_generators(spec, source.substr(7));
  } else if (starts_with(source, "random:")) {
    const auto parts = split(source.substr(7), ':');
    if (parts.size() != 2) throw Error(Errc::ConfigError, "random set source is random:SIZE:SEED");
    const auto size = parse_number<std::uint64_t>("set", parts[0]);
    const auto seed = parse_number<std::uint64_t>("set", parts[1]);
    Rng rng(derive_seed(seed, trial));
    out = random_subset(spec, size, rng);
  } else if (starts_with(source, "example:")) {
    const auto ex = example_generating_set(ExampleSpec::parse(source.substr(8)));
    if (!(ex.spec == spec)) throw Error(Errc::SpecMismatch, "example lives in " + ex.spec.literal());
    out = ex.set;
  } else {
    const std::string path(starts_with(source, "file:") ? source.substr(5) : source);
    out = GenSet(spec, read_matrix_file(spec, path));
  }
  return c.symmetrize ? symmetrize(out) : out;
}

// For example sources the group comes from the example itself.
GroupSpec resolve_group(const ExperimentConfig& c, const char* fallback) {
  if (c.group.empty() && starts_with(c.set, "example:")) {
    return example_generating_set(ExampleSpec::parse(std::string_view(c.set).substr(8))).spec;
  }
  return GroupSpec::parse(group_or(c, fallback));
}

Json stats_json(const ProductStats& s) {
  Json j;
  j["size1"] = s.size1;
  j["size2"] = s.size2;
  j["size3"] = s.size3;
  j["tripling"] = rational_json(s.tripling);
  j["exponent"] = s.exponent;
  j["saturated"] = s.saturated;
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["hypothesis_met"] = v.hypothesis_met;
  j["holds"] = v.holds;
  Json clauses = Json::array();
  for (const auto& cl : v.clauses) {
    clauses.push_back({{"name", cl.name},
                       {"lhs", to_string(cl.lhs)},
                       {"relation", cl.relation},
                       {"rhs", to_string(cl.rhs)},
                       {"holds", cl.holds}});
  }
  j["clauses"] = std::move(clauses);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

std::vector<Json> run_growth(const ExperimentConfig& c) {
  const GroupSpec spec = resolve_group(c, "SL(2,7)");
  const std::string source = c.set.empty() ? "random:10:" + std::to_string(c.seed) : c.set;
  return parallel_cases(c.trials, c.threads, [&](std::uint64_t t) {
    const GenSet alpha = load_set(spec, c, source, t);
    const ProductStats s = growth_stats(alpha, limits_of(c));
    Json j{{"command", "growth"}, {"trial", t}, {"group", spec.literal()}};
    j.update(stats_json(s));
    bool ok = true;
    if (c.assert_size3_max) {
      j["size3_max"] = *c.assert_size3_max;
      ok = s.size3 <= *c.assert_size3_max;
    }
    j["ok"] = ok;
    return j;
  });
}

std::vector<Json> run_diameter(const ExperimentConfig& c) {
  const GroupSpec spec = resolve_group(c, "SL(2,7)");
  if (c.method != "both" && c.method != "bfs" && c.method != "bidir") {
    throw Error(Errc::ConfigError, "method must be bfs, bidir or both");
  }
  const GenSet s = load_set(spec, c, c.set.empty() ? "preset:transvections" : c.set, 0);
  Json j{{"command", "diameter"}, {"group", spec.literal()}, {"order", to_string(spec.order())}, {"generators", s.size()}};
  bool ok = true;
  if (c.method != "bidir") {
    const BallProfile profile = bfs_diameter(s, limits_of(c));
    j["diameter_bfs"] = profile.diameter;
    j["profile"] = {{"radius", profile.radii}, {"size", profile.sizes}};
    const Verdict v = polylog_check(profile, spec, c.polylog_c);
    j["polylog"] = verdict_json(v);
    ok = ok && v.holds;
  }
  if (c.method != "bfs") {
    const int d = bidir_diameter(s, limits_of(c));
    j["diameter_bidir"] = d;
    if (c.method == "both") {
      const bool agree = j["diameter_bfs"].get<int>() == d;
      j["agree"] = agree;
      ok = ok && agree;
    }
  }
  j["ok"] = ok;
  return {j};
}

std::vector<Json> run_dichotomy(const ExperimentConfig& c) {
  const GroupSpec spec = resolve_group(c, "SL(2,7)");
  const std::vector<Torus> tori = maximal_tori(spec);
  std::vector<Json> out;
  bool partition_ok = true;
  if (c.verify_tori) {
    const auto rep = verify_torus_partition(spec);
    partition_ok = rep.ok();
    out.push_back({{"command", "dichotomy"},
                   {"group", spec.literal()},
                   {"torus_partition", {{"tori", rep.tori}, {"regular", rep.regular_count}, {"ok", rep.ok()}}},
                   {"ok", partition_ok}});
  }
  const std::string source = c.set.empty() ? "random:20:" + std::to_string(c.seed) : c.set;
  auto trials = parallel_cases(c.trials, c.threads, [&](std::uint64_t t) {
    const GenSet alpha = load_set(spec, c, source, t);
    const DichotomyReport rep = dichotomy_report(alpha, tori);
    Json rows = Json::array();
    for (const auto& r : rep.tori) {
      rows.push_back({{"kind", to_string(r.kind)},
                      {"order", r.order},
                      {"covered", r.covered},
                      {"cap_alpha", r.cap_alpha},
                      {"cap_alpha2", r.cap_alpha2},
                      {"cap_alpha2_regular", r.cap_alpha2_regular},
                      {"mu_T", r.mu_t},
                      {"mu_G", r.mu_g}});
    }
    auto hist = [](const std::map<std::uint64_t, std::uint64_t>& h) {
      Json o = Json::object();
      for (const auto& [k, v] : h) o[std::to_string(k)] = v;
      return o;
    };
    return Json{{"command", "dichotomy"},
                {"trial", t},
                {"group", spec.literal()},
                {"alpha_size", rep.alpha_size},
                {"tori", rep.tori.size()},
                {"covered", rep.covered},
                {"scale_torus", rep.scale_torus},
                {"scale_torus_regular", rep.scale_torus_regular},
                {"covered_hist", hist(rep.covered_hist)},
                {"uncovered_hist", hist(rep.uncovered_hist)},
                {"per_torus", std::move(rows)},
                {"ok", true}};
  });
  for (auto& j : trials) out.push_back(std::move(j));
  return out;
}

std::vector<Json> run_construct(const ExperimentConfig& c) {
  std::vector<std::string> examples = c.examples;
  if (examples.empty()) examples = {"dense:n=3,q=3"};
  if (!c.out.empty() && examples.size() != 1) throw Error(Errc::ConfigError, "out needs exactly one example");
  return parallel_cases(examples.size(), c.threads, [&](std::uint64_t i) {
    const ExampleSpec ex = ExampleSpec::parse(examples[i]);
    const ExampleSet set = ex.variant == ExampleVariant::Dense ? example_generating_set(ex)
                                                               : moderate_growth_set(ex.n, ex.q_or_p);
    const auto h = set.diagonal_part.size();
    const auto q = set.spec.field().q();
    const auto size3 = product_size(product_set(set.set, set.set, limits_of(c)), set.set, 0, limits_of(c));
    const bool generates = verify_generation(set.set);
    Json j{{"command", "construct"},
           {"example", ex.literal()},
           {"group", set.spec.literal()},
           {"n", ex.n},
           {"q", q},
           {"diagonal_part", h},
           {"size1", set.set.size()},
           {"size3", size3},
           {"generates", generates},
           {"generation_method", set.spec.order() <= 2'000'000 ? "closure" : "certificate"}};
    bool ok = generates && set.set.size() == h + 4;
    if (ex.variant == ExampleVariant::Dense) {
      const std::uint64_t bound = h * (3 * (q - 1) * (q - 1) + 58) + 64;
      j["bound"] = bound;
      j["below_100_size1"] = size3 < 100 * set.set.size();
      ok = ok && size3 <= bound && size3 < 100 * set.set.size();
    } else {
      j["bound"] = nullptr;
    }
    j["ok"] = ok;
    if (!c.out.empty()) {
      std::ofstream f(c.out);
      if (!f) throw Error(Errc::ConfigError, "cannot write " + c.out);
      f << "# " << ex.literal() << " in " << set.spec.literal() << '\n';
      write_matrices(set.spec, f, set.set.elements());
      j["written"] = c.out;
    }
    return j;
  });
}

std::vector<Json> run_lemmas(const ExperimentConfig& c) {
  std::vector<std::string> names = c.suite == "all" ? suite_names() : split(c.suite, ';');
  return parallel_cases(names.size(), c.threads, [&](std::uint64_t i) {
    const SuiteResult r = run_suite(names[i], c.cases, derive_seed(c.seed, i), c.group);
    Json j{{"command", "lemmas"},
           {"suite", r.name},
           {"group", r.group},
           {"cases", r.cases},
           {"skipped", r.skipped},
           {"violations", r.violations}};
    for (const auto& v : r.verdicts) {
      if (!v.holds) {
        j["first_violation"] = verdict_json(v);
        break;
      }
    }
    j["ok"] = r.violations == 0;
    return j;
  });
}

std::vector<Json> run_gowers(const ExperimentConfig& c) {
  const GroupSpec spec = resolve_group(c, "SL(2,5)");
  const std::uint64_t k = min_rep_degree(spec);
  const std::uint64_t order = spec.order_u64();
  std::uint64_t s = c.set_size;
  if (s == 0) {
    s = 1;
    while (BigInt(k) * s * s * s <= BigInt(order) * order * order) ++s;
  }
  return parallel_cases(c.trials, c.threads, [&](std::uint64_t t) {
    Rng rng(derive_seed(c.seed, t));
    const GenSet alpha = c.set.empty() ? random_symmetric_set(spec, s, rng) : load_set(spec, c, c.set, t);
    const Verdict v = check_gowers(alpha, alpha, alpha, k, limits_of(c));
    return Json{{"command", "gowers"},
                {"trial", t},
                {"group", spec.literal()},
                {"k", k},
                {"size", alpha.size()},
                {"verdict", verdict_json(v)},
                {"ok", v.holds}};
  });
}

Json family_json(const pargcd::ParamFamily& fam, const std::vector<pargcd::PartitionClass>& partition,
                 const std::vector<pargcd::PartitionClass>& refined, const pargcd::VerifyReport& rep,
                 bool detail) {
  const pargcd::Ring ring(fam.field, fam.k);
  Json j{{"command", "pargcd"},
         {"field", fam.field.literal()},
         {"k", fam.k},
         {"d", fam.d()},
         {"total_degree", fam.total_degree()},
         {"partition_classes", partition.size()},
         {"classes", rep.classes},
         {"empty_classes", rep.empty_classes},
         {"points", rep.points},
         {"uncovered", rep.uncovered},
         {"overlaps", rep.overlaps},
         {"gcd_mismatches", rep.gcd_mismatches},
         {"label_mismatches", rep.label_mismatches},
         {"bound_digits", rep.class_bound.str().size()},
         {"within_bound", rep.within_bound}};
  if (!rep.first_mismatch.empty()) j["first_mismatch"] = rep.first_mismatch;
  if (detail) {
    Json polys = Json::array();
    for (const auto& p : fam.polys) polys.push_back(ring.format(p));
    j["polys"] = std::move(polys);
    Json cls = Json::array();
    for (const auto& pc : refined) {
      Json conds = Json::array();
      for (const auto& cond : pc.conditions) conds.push_back(ring.format(cond.poly) + (cond.vanishes ? " = 0" : " != 0"));
      cls.push_back({{"conditions", std::move(conds)},
                     {"gcd", ring.format(pc.gcd)},
                     {"label", pc.label == pargcd::kInfinite ? Json("infinite") : Json(pc.label)}});
    }
    j["class_list"] = std::move(cls);
  }
  j["ok"] = rep.ok();
  return j;
}

std::vector<Json> run_pargcd(const ExperimentConfig& c) {
  auto one = [](const pargcd::ParamFamily& fam, bool detail) {
    const auto partition = pargcd::parametric_partition(fam);
    const auto refined = pargcd::root_count_refinement(fam, partition);
    const auto rep = pargcd::verify_partition(fam, refined);
    return family_json(fam, partition, refined, rep, detail);
  };
  if (!c.family.empty()) {
    std::ifstream in(c.family);
    if (!in) throw Error(Errc::ConfigError, "cannot open family file " + c.family);
    std::ostringstream text;
    text << in.rdbuf();
    return {one(pargcd::parse_family(text.str()), true)};
  }
  struct Job {
    std::string field;
    int k;
    std::uint64_t index;
  };
  std::vector<Job> jobs;
  for (const auto& f : c.fields) {
    for (int k : c.params) {
      for (std::uint64_t i = 0; i < c.families; ++i) jobs.push_back({f, k, i});
    }
  }
  return parallel_cases(jobs.size(), c.threads, [&](std::uint64_t n) {
    const Job& job = jobs[n];
    const Field field = Field::parse(job.field);
    Rng rng(derive_seed(derive_seed(c.seed, field.q() * 16 + static_cast<std::uint64_t>(job.k)), job.index));
    const auto fam = pargcd::random_family(field, job.k, c.max_degree, rng);
    Json j = one(fam, false);
    j["family"] = job.index;
    return j;
  });
}

std::vector<Json> run_sweep(const ExperimentConfig& c) {
  struct Job {
    std::uint32_t p;
    std::uint64_t trial;
  };
  std::vector<Job> jobs;
  for (auto p : c.primes) {
    for (std::uint64_t t = 0; t < c.trials; ++t) jobs.push_back({p, t});
  }
  return parallel_cases(jobs.size(), c.threads, [&](std::uint64_t n) {
    const Job& job = jobs[n];
    const GroupSpec spec(Family::SL, 2, Field::make(job.p));
    const std::uint64_t order = spec.order_u64();
    Rng rng(derive_seed(derive_seed(c.seed, job.p), job.trial));
    GenSet alpha = random_symmetric_set(spec, c.start_size, rng);
    Json steps = Json::array();
    std::string stop = "whole_group";
    for (int step = 0;; ++step) {
      const std::uint64_t a = alpha.size();
      Json rec{{"step", step}, {"size", a}};
      if (a == order) {
        steps.push_back(std::move(rec));
        break;
      }
      // alpha^3 = (alpha alpha) alpha costs about |alpha|^2 + |alpha^2||alpha| products.
      const double a2 = std::min<double>(static_cast<double>(a) * a, static_cast<double>(order));
      if (static_cast<double>(a) * a + a2 * a > static_cast<double>(c.budget)) {
        steps.push_back(std::move(rec));
        stop = "budget";
        break;
      }
      GenSet next = power_set(alpha, 3, limits_of(c));
      rec["size3"] = next.size();
      rec["exponent"] = a > 1 ? std::log(static_cast<double>(next.size())) / std::log(static_cast<double>(a)) - 1 : 0.0;
      steps.push_back(std::move(rec));
      alpha = std::move(next);
    }
    return Json{{"command", "sweep"},
                {"group", spec.literal()},
                {"p", job.p},
                {"trial", job.trial},
                {"order", order},
                {"stop", stop},
                {"steps", std::move(steps)},
                {"ok", true}};
  });
}

}  // namespace

RunResult run(const ExperimentConfig& config) {
  static const std::map<std::string, std::function<std::vector<Json>(const ExperimentConfig&)>> table{
      {"growth", run_growth},   {"diameter", run_diameter}, {"dichotomy", run_dichotomy},
      {"construct", run_construct}, {"lemmas", run_lemmas},   {"gowers", run_gowers},
      {"pargcd", run_pargcd},   {"sweep", run_sweep}};
  const auto it = table.find(config.command);
  if (it == table.end()) throw Error(Errc::ConfigError, "unknown command '" + config.command + "'");
  RunResult res;
  try {
    res.records = it->second(config);
  } catch (const Error& e) {
    throw Error(e.code(), config.command + ": " + std::string(e.what()).substr(to_string(e.code()).size() + 2));
  }
  for (const auto& r : res.records) res.all_ok = res.all_ok && r.value("ok", true);
  return res;
}

void write_ndjson(const ExperimentConfig& config, const RunResult& result, std::ostream& out) {
  for (const auto& r : result.records) out << r.dump() << '\n';
  std::uint64_t failed = 0;
  for (const auto& r : result.records) failed += r.value("ok", true) ? 0 : 1;
  Json summary{{"command", config.command},
               {"seed", config.seed},
               {"records", result.records.size()},
               {"failed", failed},
               {"ok", result.all_ok}};
  out << Json{{"summary", std::move(summary)}}.dump() << '\n';
}

std::string default_plot_kind(std::string_view command) {
  if (command == "diameter") return "ball-profile";
  if (command == "dichotomy") return "dichotomy";
  if (command == "construct") return "growth-sweep";
  if (command == "growth") return "growth";
  if (command == "sweep") return "trajectory";
  return "";
}

std::string emit_plot_data(const std::vector<Json>& records, std::string_view kind) {
  std::ostringstream out;
  // Empty cell for missing values and for ln 0 concentrations.
  auto num = [](const Json& v) {
    if (v.is_null() || (v.is_number_float() && !std::isfinite(v.get<double>()))) return std::string();
    return v.dump();
  };
  if (kind == "ball-profile") {
    out << "radius,size\n";
    for (const auto& r : records) {
      if (!r.contains("profile")) continue;
      const auto& p = r["profile"];
      for (std::size_t i = 0; i < p["radius"].size(); ++i) out << p["radius"][i] << ',' << p["size"][i] << '\n';
    }
  } else if (kind == "dichotomy") {
    out << "trial,kind,order,covered,cap_alpha,cap_alpha2,cap_alpha2_regular,mu_T,mu_G\n";
    for (const auto& r : records) {
      if (!r.contains("per_torus")) continue;
      for (const auto& t : r["per_torus"]) {
        out << r["trial"] << ',' << t["kind"].get<std::string>() << ',' << t["order"] << ',' << (t["covered"].get<bool>() ? 1 : 0)
            << ',' << t["cap_alpha"] << ',' << t["cap_alpha2"] << ',' << t["cap_alpha2_regular"] << ','
            << num(t["mu_T"]) << ',' << num(t["mu_G"]) << '\n';
      }
    }
  } else if (kind == "growth-sweep") {
    out << "n,q,size1,size3,bound\n";
    for (const auto& r : records) {
      out << r["n"] << ',' << r["q"] << ',' << r["size1"] << ',' << r["size3"] << ',' << num(r["bound"]) << '\n';
    }
  } else if (kind == "growth") {
    out << "trial,size1,size2,size3,exponent\n";
    for (const auto& r : records) {
      out << r["trial"] << ',' << r["size1"] << ',' << r["size2"] << ',' << r["size3"] << ',' << r["exponent"] << '\n';
    }
  } else if (kind == "trajectory") {
    out << "p,trial,step,size,exponent\n";
    for (const auto& r : records) {
      for (const auto& s : r["steps"]) {
        out << r["p"] << ',' << r["trial"] << ',' << s["step"] << ',' << s["size"] << ','
            << (s.contains("exponent") ? s["exponent"].dump() : "") << '\n';
      }
    }
  } else {
    throw Error(Errc::ConfigError, "unknown plot kind '" + std::string(kind) + "'");
  }
  return out.str();
}

}  // namespace growthlab
