#include <doctest.h>

#include <cmath>

#include "growthlab/construct.hpp"
#include "growthlab/tori.hpp"

using namespace growthlab;

TEST_CASE("regular semisimple elements") {
  const auto g = GroupSpec::parse("SL(2,7)");
  CHECK_FALSE(is_regular_semisimple(g, g.identity()));
  CHECK(is_regular_semisimple(g, g.from_ints({2, 0, 0, 4})));
  const auto g5 = GroupSpec::parse("SL(2,5)");
  const Fq two = g5.field().from_int(2);
  const Fq minus_two = g5.field().from_int(-2);
  std::uint64_t regular = 0, trace_pm2 = 0;
  for (const auto& m : enumerate_group(g5)) {
    regular += is_regular_semisimple(g5, m);
    const Fq t = g5.trace(m);
    trace_pm2 += t == two || t == minus_two;
  }
  CHECK(regular == 120 - trace_pm2);
}

TEST_CASE("centralizers") {
  const auto g = GroupSpec::parse("SL(2,5)");
  CHECK(centralizer(g, g.identity()).size() == 120);
  for (const char* lit : {"SL(2,7)", "SL(2,11)", "SL(2,9)"}) {
    const auto h = GroupSpec::parse(lit);
    const Fq gen = h.field().primitive_element();
    const Matrix d = diagonal(h, {gen, h.field().inv(gen)});
    CHECK(centralizer(h, d) == diagonal_subgroup(h));
  }
  const auto g7 = GroupSpec::parse("SL(2,7)");
  Rng rng(21);
  int seen = 0;
  while (seen < 100) {
    const Matrix m = random_element(g7, rng);
    if (!is_regular_semisimple(g7, m)) continue;
    ++seen;
    const GenSet c = centralizer(g7, m);
    CHECK(c.contains(m));
    const Matrix a = c[rng.below(c.size())];
    const Matrix b = c[rng.below(c.size())];
    CHECK(g7.mul(a, b) == g7.mul(b, a));
  }
}

TEST_CASE("maximal tori of SL(2,5)") {
  const auto g = GroupSpec::parse("SL(2,5)");
  const auto tori = maximal_tori(g);
  int split = 0, nonsplit = 0;
  for (const auto& t : tori) {
    if (t.kind == TorusKind::Split) {
      ++split;
      CHECK(t.order == 4);
    } else if (t.kind == TorusKind::Nonsplit) {
      ++nonsplit;
      CHECK(t.order == 6);
    }
  }
  CHECK(split == 15);
  CHECK(nonsplit == 10);
  CHECK(verify_torus_partition(g).ok());
}

TEST_CASE("torus partition in SL(3,2)") {
  CHECK(verify_torus_partition(GroupSpec::parse("SL(3,2)")).ok());
}

TEST_CASE("dichotomy report edge cases") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const auto tori = maximal_tori(g);
  const Torus& t = tori.front();
  const DichotomyReport rep = dichotomy_report(t.elements, tori);
  REQUIRE(rep.tori.size() == tori.size());
  CHECK(rep.tori.front().covered);
  CHECK(rep.tori.front().cap_alpha == t.elements.size());
  CHECK(rep.tori.front().mu_t == doctest::Approx(std::log(static_cast<double>(t.elements.size()))));
  const DichotomyReport one = dichotomy_report(GenSet::identity_set(g), tori);
  CHECK(one.covered == 0);
  for (const auto& r : one.tori) CHECK(r.cap_alpha == 1);
}
