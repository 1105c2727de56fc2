#include <doctest.h>

#include <cmath>

#include "growthlab/cayley.hpp"
#include "growthlab/construct.hpp"
#include "growthlab/error.hpp"

using namespace growthlab;

TEST_CASE("diameter one") {
  const auto g = GroupSpec::parse("SL(2,3)");
  const GenSet all = enumerate_group(g);
  const GenSet s = set_difference(all, GenSet::identity_set(g));
  CHECK(bfs_diameter(s).diameter == 1);
  CHECK(bidir_diameter(s) == 1);
}

TEST_CASE("a single transvection does not generate SL(2,3)") {
  const auto g = GroupSpec::parse("SL(2,3)");
  const GenSet s = symmetrize(GenSet(g, {g.from_ints({1, 1, 0, 1})}));
  CHECK_LT(generates(s).closure_size, 24);
  CHECK_THROWS_AS(bfs_diameter(s), Error);
  CHECK_THROWS_AS(bidir_diameter(s), Error);
}

TEST_CASE("BFS and bidirectional search agree") {
  for (int p : {3, 5, 7, 11, 13}) {
    CAPTURE(p);
    const auto g = GroupSpec::parse("SL(2," + std::to_string(p) + ")");
    const GenSet s = standard_generators(g, "transvections");
    const BallProfile prof = bfs_diameter(s);
    CHECK(prof.sizes.back() == g.order_u64());
    CHECK(prof.radii.back() == prof.diameter);
    CHECK(bidir_diameter(s) == prof.diameter);
  }
  const auto g = GroupSpec::parse("SL(2,7)");
  for (std::uint64_t i = 0; i < 20; ++i) {
    const GenSet s = random_generating_set(g, 2 + i % 3, derive_seed(13, i));
    CHECK(bidir_diameter(s) == bfs_diameter(s).diameter);
  }
}

TEST_CASE("boundary expansion") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const GenSet s = standard_generators(g, "transvections");
  CHECK(boundary_expansion(enumerate_group(g), s) == 0);
  CHECK(boundary_expansion(GenSet::identity_set(g), s) ==
        set_difference(s, GenSet::identity_set(g)).size());
}

TEST_CASE("balls of SL(2,7) expand") {
  const auto g = GroupSpec::parse("SL(2,7)");
  const GenSet s = standard_generators(g, "transvections");
  const double floor = 1.0 / (1.0 + std::pow(std::log(static_cast<double>(g.order_u64())), 4));
  GenSet ball = GenSet::identity_set(g);
  while (2 * ball.size() <= g.order_u64()) {
    CHECK(to_double(boundary_expansion(ball, s)) >= floor);
    ball = set_union(ball, product_set(s, ball));
  }
}

TEST_CASE("polylog check") {
  const auto g = GroupSpec::parse("SL(2,11)");
  const BallProfile prof = bfs_diameter(standard_generators(g, "transvections"));
  CHECK(polylog_check(prof, g, 2).holds);
  CHECK_FALSE(polylog_check(prof, g, 0).holds);
}
