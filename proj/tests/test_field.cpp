#include <doctest.h>

#include "growthlab/error.hpp"
#include "growthlab/field.hpp"
#include "growthlab/upoly.hpp"

using namespace growthlab;

namespace {

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

TEST_CASE("prime fields") {
  const Field f = Field::make(7);
  CHECK(f.q() == 7);
  CHECK(f.literal() == "GF(7)");
  CHECK(f.mul(Fq{3}, Fq{5}) == f.one());
  CHECK(error_of([] { Field::make(4); }) == Errc::NotPrime);
  CHECK(error_of([&] { f.inv(f.zero()); }) == Errc::DivisionByZero);
}

TEST_CASE("default modulus is the least monic irreducible") {
  CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});  // t^2 + 1
  CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // t^3 + t + 1
  CHECK(error_of([] { Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }) == Errc::ReducibleModulus);
}

TEST_CASE("GF(8) reduction") {
  const Field f = Field::make(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
  const std::uint32_t t[] = {0, 1, 0};
  const std::uint32_t t2[] = {0, 0, 1};
  const std::uint32_t t_plus_1[] = {1, 1, 0};
  CHECK(f.mul(f.from_coeffs(t), f.from_coeffs(t2)) == f.from_coeffs(t_plus_1));
}

TEST_CASE("field axioms hold exhaustively") {
  for (const char* lit : {"GF(5)", "GF(8)", "GF(9)", "GF(25)", "GF(2^5)"}) {
    CAPTURE(lit);
    const Field f = Field::parse(lit);
    const auto all = f.enumerate();
    REQUIRE(all.size() == f.q());
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (auto a : all) {
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.pow(a, f.q()) == a);
      if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
      for (auto b : all) {
        CHECK(f.mul(a, b) == f.mul_polynomial(a, b));
        CHECK(f.add(a, b) == f.add(b, a));
      }
    }
    CHECK(f.multiplicative_order(f.primitive_element()) == f.q() - 1);
  }
}

TEST_CASE("literals round-trip") {
  for (const char* lit : {"GF(7)", "GF(9)", "GF(2^5)"}) {
    const Field f = Field::parse(lit);
    CHECK(Field::parse(f.literal()) == f);
    for (auto a : f.enumerate()) CHECK(f.parse_element(f.format(a)) == a);
  }
}

TEST_CASE("frobenius root inverts the p-th power") {
  const Field f = Field::parse("GF(27)");
  for (auto a : f.enumerate()) CHECK(f.pow(f.frobenius_root(a), 3) == a);
}

TEST_CASE("univariate gcd") {
  const Field f = Field::make(5);
  const UPoly a{f.from_int(-1), f.zero(), f.one()};  // t^2 - 1
  const UPoly b{f.from_int(-1), f.one()};            // t - 1
  CHECK(upoly::gcd(f, a, b) == b);
  CHECK(upoly::degree(upoly::derivative(f, a)) == 1);
}
