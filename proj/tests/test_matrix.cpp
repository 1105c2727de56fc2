#include <doctest.h>

#include <set>
#include <sstream>

#include "growthlab/groupset.hpp"
#include "growthlab/matrix.hpp"

using namespace growthlab;

TEST_CASE("group orders") {
  CHECK(GroupSpec::parse("SL(2,3)").order() == 24);
  CHECK(GroupSpec::parse("GL(2,2)").order() == 6);
  CHECK(GroupSpec::parse("SL(3,3)").order() == 5616);
  CHECK(GroupSpec::parse("GL(2,5)").order() == 480);
  CHECK(enumerate_group(GroupSpec::parse("SL(2,3)")).size() == 24);
  CHECK(enumerate_group(GroupSpec::parse("GL(2,2)")).size() == 6);
  CHECK(enumerate_group(GroupSpec::parse("SL(2,4)")).size() == 60);
}

TEST_CASE("determinant and membership") {
  const auto g = GroupSpec::parse("SL(2,5)");
  const Matrix m = g.from_ints({2, 0, 0, 3});
  CHECK(g.det(m) == g.field().one());
  CHECK(g.contains(m));
  CHECK_FALSE(g.contains(g.from_ints({2, 0, 0, 2})));
}

TEST_CASE("identity, inverse and transpose on random elements") {
  for (const char* lit : {"SL(2,7)", "GL(3,4)", "SL(4,3)"}) {
    const auto g = GroupSpec::parse(lit);
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
      const Matrix a = random_element(g, rng);
      REQUIRE(g.contains(a));
      CHECK(g.mul(g.identity(), a) == a);
      CHECK(g.is_identity(g.mul(g.inverse(a), a)));
      CHECK(g.transpose(g.transpose(a)) == a);
      CHECK(g.det(g.transpose(a)) == g.det(a));
    }
  }
}

TEST_CASE("encoding is injective and order-preserving") {
  const auto g = GroupSpec::parse("SL(2,3)");
  const GenSet all = enumerate_group(g);
  std::set<std::string> codes;
  std::string prev;
  for (const auto& m : all) {
    const auto e = g.encode(m);
    CHECK(e > prev);
    prev = e;
    codes.insert(e);
    CHECK(g.decode(e) == m);
    if (g.packable()) CHECK(g.unpack(g.pack(m)) == m);
  }
  CHECK(codes.size() == 24);
  CHECK(g.encode(g.identity()) == g.encode(g.from_ints({1, 0, 0, 1})));
}

TEST_CASE("decode(encode(A)) = A for random A") {
  for (const char* lit : {"GL(3,9)", "SL(5,3)", "SL(2,2^5)", "SL(8,2)"}) {
    const auto g = GroupSpec::parse(lit);
    Rng rng(5);
    for (int i = 0; i < 250; ++i) {
      const Matrix a = random_element(g, rng);
      CHECK(g.decode(g.encode(a)) == a);
      CHECK(g.parse_matrix(g.format(a)) == a);
    }
  }
}

TEST_CASE("matrix files round-trip") {
  const auto g = GroupSpec::parse("SL(2,9)");
  Rng rng(3);
  const GenSet s = random_subset(g, 10, rng);
  std::stringstream io;
  io << "# header\n\n";
  write_matrices(g, io, s.elements());
  CHECK(GenSet(g, read_matrices(g, io)) == s);
}

TEST_CASE("group literals") {
  CHECK(GroupSpec::parse("SL(2,2^5)").field().q() == 32);
  CHECK(GroupSpec::parse(GroupSpec::parse("GL(3,4)").literal()) == GroupSpec::parse("GL(3,4)"));
}
