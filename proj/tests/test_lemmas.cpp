#include <doctest.h>

#include "growthlab/construct.hpp"
#include "growthlab/error.hpp"
#include "growthlab/lemmas.hpp"
#include "growthlab/tori.hpp"

using namespace growthlab;

namespace {

GenSet transvection_pair(const GroupSpec& g) {
  return set_union(symmetrize(GenSet(g, {g.from_ints({1, 1, 0, 1}), g.from_ints({1, 0, 1, 1})})),
                   GenSet::identity_set(g));
}

GenSet center(const GroupSpec& g) { return GenSet(g, {g.identity(), g.from_ints({-1, 0, 0, -1})}); }

}  // namespace

TEST_CASE("olson") {
  const auto g = GroupSpec::parse("SL(2,5)");
  const GenSet all = enumerate_group(g);
  CHECK(check_olson(all, all).holds);
  const GenSet a = transvection_pair(g);
  const Verdict v = check_olson(a, a);
  CHECK(v.holds);
  CHECK(2 * product_size(a, a) >= 3 * a.size());
  CHECK_THROWS_AS(check_olson(symmetrize(GenSet(g, {g.from_ints({1, 1, 0, 1})})), a), Error);
}

TEST_CASE("ruzsa") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const GenSet z = center(g);
  for (int m = 3; m <= 6; ++m) CHECK(check_ruzsa(z, m).holds);
  CHECK(check_ruzsa(transvection_pair(g), 3).holds);
  CHECK_THROWS_AS(check_ruzsa(transvection_pair(g), 2), Error);
  CHECK(run_suite("ruzsa", 30, 5).violations == 0);
}

TEST_CASE("gowers") {
  const auto g = GroupSpec::parse("SL(2,5)");
  const GenSet all = enumerate_group(g);
  CHECK(check_gowers(all, all, all, 1).holds);
  Rng rng(2);
  const Verdict small = check_gowers(random_symmetric_set(g, 5, rng), all, all, 2);
  CHECK_FALSE(small.hypothesis_met);
  CHECK(small.note == "hypothesis not met");
  CHECK(min_rep_degree(GroupSpec::parse("SL(2,7)")) == 3);
  CHECK(min_rep_degree(g) == 2);
  CHECK(min_rep_degree(GroupSpec::parse("SL(3,4)")) == 2);
  CHECK_THROWS_AS(min_rep_degree(GroupSpec::parse("GL(2,5)")), Error);
}

TEST_CASE("coset concentration") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const auto tori = maximal_tori(g);
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const GenSet a = random_symmetric_set(g, 8, rng);
    const Torus& t = tori[rng.below(tori.size())];
    CHECK(check_coset_concentration(a, t.elements, g.identity(), 1).holds);
    CHECK(check_coset_concentration(a, t.elements, a[rng.below(a.size())], 1).holds);
  }
}

TEST_CASE("quotient growth") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const GenSet gens = standard_generators(g, "transvections");
  const GenSet a = transvection_pair(g);
  CHECK(check_quotient_growth(a, GenSet::identity_set(g), gens).holds);
  CHECK(check_quotient_growth(a, center(g), gens).holds);
  CHECK(check_quotient_growth(a, enumerate_group(g), gens).holds);
  std::vector<Matrix> unipotent;
  for (int t = 0; t < 7; ++t) unipotent.push_back(g.from_ints({1, t, 0, 1}));
  const GenSet not_normal(g, unipotent);
  CHECK_THROWS_AS(check_quotient_growth(a, not_normal, gens), Error);
}

TEST_CASE("schreier") {
  const auto g = GroupSpec::parse("SL(2,5)");
  const GenSet a = transvection_pair(g);
  CHECK(check_schreier(a, enumerate_group(g)).holds);
  const Verdict skipped = check_schreier(a, center(g));
  CHECK_FALSE(skipped.hypothesis_met);
}

TEST_CASE("subgroup growth and max coset") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const GenSet a = transvection_pair(g);
  CHECK(check_subgroup_growth(a, GenSet::identity_set(g), 1).holds);
  CHECK(check_subgroup_growth(a, enumerate_group(g), 2).holds);
  CHECK(check_max_coset(a, GenSet::identity_set(g), 1).holds);
  const GenSet z = center(g);
  CHECK(check_max_coset(z, z, 1).holds);
  const auto tori = maximal_tori(g);
  CHECK_THROWS_AS(check_max_coset(a, tori.front().elements, 1), Error);
}

TEST_CASE("freiman detection") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const auto tori = maximal_tori(g);
  const GenSet all = enumerate_group(g);
  const Torus& t = tori[3];
  const GenSet norm = normalizer(t.elements, all);
  const Matrix h = norm[norm.size() - 1];
  const GenSet coset = translate(t.elements, h, false);
  const auto found = freiman_detect(coset);
  REQUIRE(found);
  CHECK(found->s == t.elements);
  CHECK(translate(found->s, found->x, false) == coset);

  const auto sub = freiman_detect(t.elements);
  REQUIRE(sub);
  CHECK(sub->s == t.elements);
  CHECK(g.is_identity(sub->x));

  CHECK_FALSE(freiman_detect(transvection_pair(GroupSpec::parse("SL(2,5)"))));
}

TEST_CASE("suites are seed-deterministic and clean") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const SuiteResult a = run_suite(name, 8, 77);
    const SuiteResult b = run_suite(name, 8, 77);
    CHECK(a.violations == 0);
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
      REQUIRE(a.verdicts[i].clauses.size() == b.verdicts[i].clauses.size());
      for (std::size_t j = 0; j < a.verdicts[i].clauses.size(); ++j) {
        CHECK(a.verdicts[i].clauses[j].lhs == b.verdicts[i].clauses[j].lhs);
      }
    }
  }
  CHECK_THROWS_AS(run_suite("nope", 1, 1), Error);
}
