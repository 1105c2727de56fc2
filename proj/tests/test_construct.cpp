#include <doctest.h>

#include "growthlab/construct.hpp"
#include "growthlab/error.hpp"

using namespace growthlab;

TEST_CASE("dense examples over GF(3)") {
  const std::uint64_t sizes[] = {8, 12, 20};
  for (int n = 3; n <= 5; ++n) {
    CAPTURE(n);
    const auto ex = example_generating_set(ExampleSpec::parse("dense:n=" + std::to_string(n) + ",q=3"));
    CHECK(ex.set.size() == sizes[n - 3]);
    CHECK(ex.diagonal_part.size() == (1u << (n - 1)));
    CHECK_FALSE(ex.diagonal_part.contains(ex.c));
    CHECK(ex.set.contains(ex.a));
    CHECK(ex.set.contains(ex.s));
  }
}

TEST_CASE("example spec literals") {
  CHECK(ExampleSpec::parse("dense:n=4,q=5").literal() == "dense:n=4,q=5");
  CHECK(ExampleSpec::parse("moderate:n=3,p=5").literal() == "moderate:n=3,p=5");
  CHECK_THROWS_AS(ExampleSpec::parse("sparse:n=3"), Error);
}

TEST_CASE("moderate set") {
  const auto ex = moderate_growth_set(3, 5);
  CHECK(ex.spec.field().q() == 32);
  const GenSet& p = ex.diagonal_part;
  CHECK(conjugate_set(p, ex.s) == p);
  CHECK(ex.set.size() == p.size() + 4);
  CHECK(2 * product_size(p, p) >= 3 * p.size());
}

TEST_CASE("standard generators") {
  CHECK(generates(standard_generators(GroupSpec::parse("SL(2,7)"), "transvections")).closure_size == 336);
  CHECK(generates(standard_generators(GroupSpec::parse("SL(3,3)"), "transvections")).closure_size == 5616);
  const auto gl = GroupSpec::parse("GL(2,5)");
  const GenSet s = standard_generators(gl, "transvections");
  CHECK(generates(s).closure_size == 480);
  bool has_g = false;
  for (const auto& m : s) has_g = has_g || gl.det(m) == gl.field().primitive_element();
  CHECK(has_g);
  CHECK(generates(standard_generators(GroupSpec::parse("SL(3,4)"), "weyl_plus_transvection")).generates);
  CHECK_THROWS_AS(standard_generators(gl, "nope"), Error);
}

TEST_CASE("random generating sets") {
  const auto g = GroupSpec::parse("SL(2,7)");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GenSet a = random_generating_set(g, 3, seed);
    CHECK(a == random_generating_set(g, 3, seed));
    CHECK(generates(a).generates);
    CHECK(a.size() >= 3);
    CHECK(a.size() <= 7);
  }
  CHECK_THROWS_AS(random_generating_set(g, 1, 0), Error);
}

TEST_CASE("generation certificates") {
  const auto ex4 = example_generating_set(ExampleSpec::parse("dense:n=4,q=3"));
  const auto cert = certify_generation(ex4.set);
  CHECK(cert.certified);
  CHECK(verify_generation(ex4.set));
  const auto g = GroupSpec::parse("SL(3,3)");
  const GenSet diag = symmetrize(diagonal_subgroup(g));
  CHECK_FALSE(certify_generation(diag).certified);
  CHECK_FALSE(verify_generation(diag));
}
