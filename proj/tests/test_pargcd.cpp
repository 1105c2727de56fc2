#include <doctest.h>

#include "growthlab/error.hpp"
#include "growthlab/pargcd.hpp"

using namespace growthlab;
using namespace growthlab::pargcd;

namespace {

std::vector<PartitionClass> refine(const ParamFamily& fam) {
  return root_count_refinement(fam, parametric_partition(fam));
}

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("one polynomial is its own gcd") {
  const auto fam = parse_family("field = GF(5)\nt - z1\n");
  const auto classes = parametric_partition(fam);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].conditions.empty());
  const Ring ring(fam.field, 1);
  CHECK(ring.format(classes[0].gcd) == "t + 4*z1");
  CHECK(verify_partition(fam).ok());
}

TEST_CASE("two-class family") {
  const auto fam = parse_family("field = GF(5)\nt^2 - z1\nt - 1\n");
  const auto classes = refine(fam);
  REQUIRE(classes.size() == 2);
  const Ring ring(fam.field, 1);
  for (const auto& c : classes) {
    REQUIRE(c.conditions.size() == 1);
    CHECK(ring.format(c.conditions[0].poly) == "z1 + 4");
    if (c.conditions[0].vanishes) {
      CHECK(c.label == 1);
      CHECK(ring.format(c.gcd) == "t + 4");
    } else {
      CHECK(c.label == 0);
      CHECK(tdegree(c.gcd) == 0);
    }
  }
  const auto rep = verify_partition(fam, classes);
  CHECK(rep.ok());
  CHECK(rep.points == 5);
  CHECK(rep.empty_classes == 0);
}

TEST_CASE("degenerate families") {
  const auto zero = refine(parse_family("field = GF(5)\n0\n0\n"));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].label == kInfinite);
  const auto fam = parse_family("field = GF(7)\n3\n");
  const auto c = refine(fam);
  REQUIRE(c.size() == 1);
  CHECK(c[0].label == 0);
  CHECK(verify_partition(fam).ok());
}

TEST_CASE("root counts in small characteristic") {
  auto single_label = [](const char* text) {
    const auto fam = parse_family(text);
    const auto c = refine(fam);
    CHECK(verify_partition(fam, c).ok());
    REQUIRE(c.size() == 1);
    return c[0].label;
  };
  CHECK(single_label("field = GF(3)\n(t-1)^2\n") == 1);
  CHECK(single_label("field = GF(3)\nt^2 + 1\n") == 2);
  CHECK(single_label("field = GF(3)\nt^3 - z1\n") == 1);
  CHECK(single_label("field = GF(2)\n(t^2 + t + 1)^2 * (t + 1)\n") == 3);
  CHECK(single_label("field = GF(4)\nt^4 + t\n") == 4);
}

TEST_CASE("oracle") {
  const auto fam = parse_family("field = GF(5)\nt^2 - 1\nt - 1\n");
  for (std::uint32_t z = 0; z < 5; ++z) {
    const Fq pt[] = {Fq{z}};
    const auto r = brute_force_oracle(fam, pt);
    CHECK(r.gcd_degree == 1);
    CHECK(r.root_count == 1);
  }
  const auto zero = parse_family("field = GF(5)\n0\n");
  const Fq pt[] = {Fq{0}};
  CHECK(brute_force_oracle(zero, pt).root_count == kInfinite);
  const auto sep = parse_family("field = GF(3)\nt^3 - t\n");
  CHECK(brute_force_oracle(sep, pt).root_count == 3);
  const auto irr = parse_family("field = GF(2)\nt^3 + t + 1\n");
  CHECK(brute_force_oracle(irr, pt).root_count == 3);
}

TEST_CASE("random families agree with the oracle") {
  for (const char* lit : {"GF(2)", "GF(3)", "GF(5)", "GF(9)"}) {
    const Field f = Field::parse(lit);
    for (int k : {1, 2}) {
      Rng rng(derive_seed(31, f.q() * 4 + k));
      for (int i = 0; i < 25; ++i) {
        const auto fam = random_family(f, k, 5, rng);
        const auto rep = verify_partition(fam);
        CHECK_MESSAGE(rep.ok(), format_family(fam), rep.first_mismatch);
      }
    }
  }
}

TEST_CASE("partition is deterministic") {
  Rng r1(4), r2(4);
  const auto fam = random_family(Field::make(7), 2, 4, r1);
  const auto a = refine(fam);
  const auto b = refine(random_family(Field::make(7), 2, 4, r2));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].conditions == b[i].conditions);
    CHECK(a[i].gcd == b[i].gcd);
    CHECK(a[i].label == b[i].label);
  }
}

TEST_CASE("text format") {
  for (const char* lit : {"GF(5)", "GF(9)", "GF(8)"}) {
    const Field f = Field::parse(lit);
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
      const auto fam = random_family(f, 2, 5, rng);
      const auto back = parse_family(format_family(fam));
      CHECK(back.polys == fam.polys);
      CHECK(back.field == fam.field);
    }
  }
  const auto fam = parse_family("t^2 + [1,2]*z1", Field::parse("GF(9)"));
  CHECK(fam.polys.size() == 1);
  CHECK(error_of([] { parse_family("field = GF(5)\nt^9\n"); }) == Errc::DegreeCapExceeded);
  CHECK(error_of([] { parse_family("field = GF(5)\nparams = 5\nt\n"); }) == Errc::DegreeCapExceeded);
  CHECK(error_of([] { parse_family("field = GF(5)\nt + z2\n"); }) == Errc::ParseError);
  CHECK(error_of([] { parse_family("field = GF(5)\nt + \n"); }) == Errc::ParseError);
  CHECK(error_of([] { parse_family("t\n"); }) == Errc::ParseError);
}

TEST_CASE("verification caps and mismatch reporting") {
  const auto big = parse_family("field = GF(101)\nparams = 3\nt - z1\n");
  CHECK(error_of([&] { verify_partition(big); }) == Errc::SizeLimitExceeded);
  const auto fam = parse_family("field = GF(5)\nt^2 - z1\nt - 1\n");
  auto classes = refine(fam);
  classes[0].label += 1;
  CHECK_FALSE(verify_partition(fam, classes).ok());
  CHECK(error_of([&] { verify_partition(fam, classes, true); }) == Errc::MismatchFound);
  classes.pop_back();
  CHECK(verify_partition(fam, classes).uncovered > 0);
}
