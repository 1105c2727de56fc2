#include <doctest.h>

#include <cmath>

#include "growthlab/cayley.hpp"
#include "growthlab/construct.hpp"
#include "growthlab/error.hpp"
#include "growthlab/groupset.hpp"

using namespace growthlab;

namespace {

GenSet transvection_pair(const GroupSpec& g) {
  return symmetrize(GenSet(g, {g.from_ints({1, 1, 0, 1}), g.from_ints({1, 0, 1, 1})}));
}

}  // namespace

TEST_CASE("product sets") {
  const auto g = GroupSpec::parse("SL(2,5)");
  Rng rng(1);
  const GenSet a = random_subset(g, 12, rng);
  CHECK(product_set(a, GenSet::identity_set(g)) == a);
  const GenSet all = enumerate_group(GroupSpec::parse("SL(2,3)"));
  CHECK(product_set(all, all) == all);
  for (int i = 0; i < 20; ++i) {
    const Matrix x = random_element(g, rng);
    const Matrix y = random_element(g, rng);
    CHECK(product_set(GenSet(g, {x}), GenSet(g, {y})) == GenSet(g, {g.mul(x, y)}));
  }
  CHECK(product_size(a, a) == product_set(a, a).size());
}

TEST_CASE("powers are monotone when 1 is present") {
  const auto g = GroupSpec::parse("SL(2,5)");
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng(derive_seed(2, i));
    const GenSet a = set_union(random_subset(g, 1 + rng.below(8), rng), GenSet::identity_set(g));
    CHECK(power_set(a, 1) == a);
    const GenSet a2 = power_set(a, 2);
    CHECK(a.is_subset_of(a2));
    CHECK(a2.is_subset_of(power_set(a, 3)));
  }
}

TEST_CASE("first saturating power equals the BFS diameter") {
  const auto g = GroupSpec::parse("SL(2,5)");
  const GenSet s = set_union(transvection_pair(g), GenSet::identity_set(g));
  int m = 1;
  while (power_set(s, m).size() < g.order_u64()) ++m;
  CHECK(m == bfs_diameter(transvection_pair(g)).diameter);
}

TEST_CASE("symmetrize") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const GenSet sym = transvection_pair(g);
  const GenSet with1 = set_union(sym, GenSet::identity_set(g));
  CHECK(symmetrize(with1) == with1);
  const Matrix x = g.from_ints({1, 1, 0, 1});
  CHECK(symmetrize(GenSet(g, {x})).size() == 3);
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const GenSet a = random_subset(g, 1 + rng.below(10), rng);
    const GenSet s = symmetrize(a);
    CHECK(s.is_symmetric());
    CHECK(s.size() <= 2 * a.size() + 1);
  }
}

TEST_CASE("generation and closure sizes") {
  const auto g = GroupSpec::parse("SL(2,5)");
  const Generation one = generates(GenSet::identity_set(g));
  CHECK_FALSE(one.generates);
  CHECK(one.closure_size == 1);
  const Generation pair = generates(transvection_pair(g));
  CHECK(pair.generates);
  CHECK(pair.closure_size == 120);
  const auto ex = example_generating_set(ExampleSpec::parse("dense:n=3,q=3"));
  CHECK(generates(ex.set).closure_size == 5616);
}

TEST_CASE("growth statistics") {
  const auto g = GroupSpec::parse("SL(2,3)");
  const ProductStats full = growth_stats(enumerate_group(g));
  CHECK(full.tripling == 1);
  CHECK(full.saturated);
  const auto g7 = GroupSpec::parse("SL(2,7)");
  const GenSet center(g7, {g7.identity(), g7.from_ints({-1, 0, 0, -1})});
  const ProductStats sub = growth_stats(center);
  CHECK(sub.tripling == 1);
  CHECK(sub.exponent == doctest::Approx(0));
  const auto ex = example_generating_set(ExampleSpec::parse("dense:n=3,q=3"));
  const ProductStats st = growth_stats(ex.set);
  CHECK(st.size1 == 8);
  CHECK(st.size3 <= 344);
}

TEST_CASE("concentration") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const GenSet one = GenSet::identity_set(g);
  CHECK(concentration(one, one, 1) == doctest::Approx(0));
  CHECK(std::isinf(concentration(one, GenSet(g, {g.from_ints({2, 0, 0, 4})}), 1)));
  const GenSet torus = diagonal_subgroup(g);
  REQUIRE(torus.size() == 6);
  CHECK(concentration(torus, torus, 1) == doctest::Approx(std::log(6.0)));
  CHECK_THROWS_AS(concentration(torus, torus, 0), Error);
}

TEST_CASE("set operations") {
  const auto g = GroupSpec::parse("SL(2,5)");
  Rng rng(8);
  const GenSet a = random_subset(g, 30, rng);
  const GenSet b = random_subset(g, 30, rng);
  CHECK(set_union(a, b).size() + set_intersection(a, b).size() == a.size() + b.size());
  CHECK(intersection_size(a, b) == set_intersection(a, b).size());
  CHECK(set_difference(a, b).size() == a.size() - intersection_size(a, b));
  CHECK(inverse_set(inverse_set(a)) == a);
  const Matrix x = random_element(g, rng);
  CHECK(translate(translate(a, x, true), g.inverse(x), true) == a);
  CHECK(conjugate_set(a, x).size() == a.size());
  CHECK(is_subgroup(diagonal_subgroup(g)));
  CHECK_FALSE(is_subgroup(a));
}

TEST_CASE("random sampling is seed-deterministic") {
  const auto g = GroupSpec::parse("SL(3,3)");
  Rng r1(99), r2(99);
  CHECK(random_subset(g, 40, r1) == random_subset(g, 40, r2));
  Rng r3(7);
  CHECK(random_subset(GroupSpec::parse("SL(2,3)"), 20, r3).size() == 20);
}
