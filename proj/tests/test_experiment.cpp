#include <doctest.h>

#include <sstream>

#include "growthlab/error.hpp"
#include "growthlab/experiment.hpp"

using namespace growthlab;

TEST_CASE("config text round-trips") {
  ExperimentConfig c;
  c.command = "pargcd";
  c.group = "SL(2,GF(2^5:modulus=1,0,1,0,0,1))";
  c.set = "random:10:42";
  c.symmetrize = true;
  c.trials = 7;
  c.seed = 123456789012345ull;
  c.assert_size3_max = 344;
  c.polylog_c = 1.75;
  c.examples = {"dense:n=3,q=3", "moderate:n=3,p=5"};
  c.fields = {"GF(5)", "GF(2^3:modulus=1,1,0,1)"};
  c.params = {2};
  c.primes = {5, 7};
  CHECK(parse_config(format_config(c)) == c);
  CHECK(parse_config(format_config(ExperimentConfig{})) == ExperimentConfig{});
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("colour = blue\n"), Error);
  CHECK_THROWS_AS(parse_config("trials = many\n"), Error);
  CHECK_THROWS_AS(parse_config("just words\n"), Error);
  ExperimentConfig c;
  c.command = "juggle";
  CHECK_THROWS_AS(run(c), Error);
}

TEST_CASE("growth runs are reproducible and thread-independent") {
  ExperimentConfig c = parse_config("command = growth\ngroup = SL(2,7)\nset = random:10:42\ntrials = 5\n");
  const RunResult a = run(c);
  c.threads = 3;
  const RunResult b = run(c);
  REQUIRE(a.records.size() == 5);
  std::ostringstream ja, jb;
  write_ndjson(c, a, ja);
  write_ndjson(c, b, jb);
  CHECK(ja.str() == jb.str());
  CHECK(a.exit_code() == 0);
  CHECK(emit_plot_data(a.records, "growth").rfind("trial,size1,size2,size3,exponent\n", 0) == 0);
}

TEST_CASE("growth assertion drives the exit status") {
  ExperimentConfig c = parse_config("command = growth\nset = example:dense:n=3,q=3\nassert_size3_max = 344\n");
  CHECK(run(c).exit_code() == 0);
  c.assert_size3_max = 100;
  CHECK(run(c).exit_code() == 1);
}

TEST_CASE("plot data schemas") {
  ExperimentConfig d = parse_config("command = diameter\ngroup = SL(2,5)\n");
  const RunResult dr = run(d);
  CHECK(dr.records.at(0)["diameter_bfs"] == dr.records.at(0)["diameter_bidir"]);
  const std::string ball = emit_plot_data(dr.records, default_plot_kind("diameter"));
  CHECK(ball.rfind("radius,size\n0,1\n", 0) == 0);

  ExperimentConfig k = parse_config("command = construct\nexamples = dense:n=3,q=3; dense:n=4,q=3\n");
  const std::string sweep = emit_plot_data(run(k).records, "growth-sweep");
  CHECK(sweep == "n,q,size1,size3,bound\n3,3,8,104,344\n4,3,12,169,624\n");

  ExperimentConfig t = parse_config("command = dichotomy\ngroup = SL(2,5)\n");
  const std::string dich = emit_plot_data(run(t).records, "dichotomy");
  CHECK(dich.rfind("trial,kind,order,covered,cap_alpha,cap_alpha2,cap_alpha2_regular,mu_T,mu_G\n", 0) == 0);
  CHECK_THROWS_AS(emit_plot_data({}, "pie"), Error);
}

TEST_CASE("module errors carry the command name") {
  ExperimentConfig c = parse_config("command = growth\nset = file:/nonexistent/set.txt\n");
  try {
    run(c);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("growth: ") != std::string::npos);
  }
}
