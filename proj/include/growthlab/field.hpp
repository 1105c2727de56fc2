#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace growthlab {

/// A field element as its canonical code: with coefficient vector
/// (c_0, ..., c_{k-1}) (constant first), code = sum c_i * p^(k-1-i). Numeric
/// order on codes is exactly the lexicographic order on coefficient vectors.
struct Fq {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

/// GF(p^k) with an explicit monic irreducible modulus. Cheap to copy (shared
/// immutable tables); two Field handles compare equal iff p, k and modulus agree.
class Field {
 public:
  /// Validates p and the modulus. With k > 1 and no modulus, the
  /// lexicographically least monic irreducible polynomial of degree k is used.
  static Field make(std::uint32_t p, int k = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Parses "GF(7)", "GF(9)", "GF(3^2)" and "GF(2^5:modulus=1,0,1,0,0,1)"
  /// (modulus coefficients constant first, including the leading 1).
  static Field parse(std::string_view literal);

  std::uint32_t p() const;
  int k() const;
  std::uint32_t q() const;
  bool is_prime_field() const { return k() == 1; }
  /// Modulus coefficients, constant first, length k + 1. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;

  Fq zero() const { return Fq{0}; }
  Fq one() const;
  /// Image of an integer in the prime subfield.
  Fq from_int(std::int64_t v) const;
  Fq from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Fq a) const;
  std::uint32_t coeff(Fq a, int i) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;

  /// Schoolbook multiply-and-reduce; the reference the table path must match.
  Fq mul_polynomial(Fq a, Fq b) const;
  bool uses_log_tables() const;

  /// All q elements in canonical order.
  std::vector<Fq> enumerate() const;
  /// Least element (canonical order) of multiplicative order q - 1.
  Fq primitive_element() const;
  /// The unique x with x^p = a (Frobenius is bijective on a finite field).
  Fq frobenius_root(Fq a) const;
  /// Order of a in the multiplicative group.
  std::uint64_t multiplicative_order(Fq a) const;

  std::string literal() const;
  /// Decimal for prime fields, comma-separated coefficients otherwise.
  std::string format(Fq a) const;
  Fq parse_element(std::string_view text) const;

  bool operator==(const Field& other) const;

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);

/// Value with its owning field; arithmetic checks that both operands share it.
class FieldElement {
 public:
  FieldElement(Field field, Fq value) : field_(std::move(field)), value_(value) {}

  const Field& field() const { return field_; }
  Fq value() const { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(value_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement inverse() const { return {field_, field_.inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

  bool operator==(const FieldElement& o) const { return field_ == o.field_ && value_ == o.value_; }

 private:
  void check_same(const FieldElement& o) const;
  Field field_;
  Fq value_;
};

}  // namespace growthlab
