#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/field.hpp"
#include "growthlab/numeric.hpp"

namespace growthlab {

enum class Family { SL, GL };

/// Dense n x n matrix of field codes, row-major. The defaulted ordering is the
/// canonical total order: lexicographic on the row-major entry sequence.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int n, std::vector<Fq> entries);

  int n() const { return n_; }
  Fq operator()(int i, int j) const { return a_[i * n_ + j]; }
  Fq& operator()(int i, int j) { return a_[i * n_ + j]; }
  std::span<const Fq> entries() const { return a_; }

  friend auto operator<=>(const Matrix&, const Matrix&) = default;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<Fq> a_;
};

/// SL(n, q) or GL(n, q) over an explicit field, 2 <= n <= 8.
class GroupSpec {
 public:
  GroupSpec(Family family, int n, Field field);

  /// "SL(2,7)", "GL(3,4)", "SL(2,2^5)", "SL(2,GF(2^5:modulus=1,0,1,0,0,1))".
  static GroupSpec parse(std::string_view literal);

  Family family() const { return family_; }
  int n() const { return n_; }
  const Field& field() const { return field_; }
  std::string literal() const;

  /// |GL(n,q)| = prod_{i<n} (q^n - q^i); |SL(n,q)| = |GL(n,q)| / (q - 1).
  BigInt order() const;
  /// order() as a machine integer; throws SizeLimitExceeded beyond 2^63.
  std::uint64_t order_u64() const;

  Matrix identity() const;
  Matrix zero_matrix() const;
  /// Builds a matrix from prime-subfield integers, row-major.
  Matrix from_ints(std::span<const std::int64_t> values) const;
  Matrix from_ints(std::initializer_list<std::int64_t> values) const {
    return from_ints(std::span<const std::int64_t>(values.begin(), values.size()));
  }

  Matrix mul(const Matrix& a, const Matrix& b) const;
  /// Writes a*b into out (which must already be n x n); avoids reallocation.
  void mul_into(const Matrix& a, const Matrix& b, Matrix& out) const;
  Matrix inverse(const Matrix& a) const;
  Matrix transpose(const Matrix& a) const;
  Matrix conjugate(const Matrix& g, const Matrix& x) const;  // g x g^-1
  Fq det(const Matrix& a) const;
  Fq trace(const Matrix& a) const;
  bool is_identity(const Matrix& a) const;
  /// Shape, reduced entries, and det = 1 (SL) or det != 0 (GL).
  bool contains(const Matrix& a) const;

  /// Row-major concatenation of constant-first coefficient vectors; each
  /// coefficient big-endian in 1, 2 or 3 bytes depending on p. Byte order
  /// agrees with the canonical matrix order.
  std::string encode(const Matrix& a) const;
  Matrix decode(std::string_view bytes) const;

  /// True when n^2 * k * ceil(log2 p) <= 64, so pack() is available.
  bool packable() const { return packed_bits_ <= 64; }
  int packed_bits() const { return packed_bits_; }
  /// Order-preserving word form of encode(); requires packable().
  std::uint64_t pack(const Matrix& a) const;
  Matrix unpack(std::uint64_t key) const;

  /// One line of the matrix file format: entries row-major separated by ';',
  /// coefficients of an entry separated by ','.
  std::string format(const Matrix& a) const;
  Matrix parse_matrix(std::string_view line) const;

  bool operator==(const GroupSpec& o) const {
    return family_ == o.family_ && n_ == o.n_ && field_ == o.field_;
  }

 private:
  void check_shape(const Matrix& a) const;

  Family family_;
  int n_;
  Field field_;
  int coeff_bits_;
  int packed_bits_;
  int byte_width_;
};

/// Reads the matrix file format; blank lines and '#' comments are skipped.
std::vector<Matrix> read_matrices(const GroupSpec& spec, std::istream& in);
std::vector<Matrix> read_matrix_file(const GroupSpec& spec, const std::string& path);
void write_matrices(const GroupSpec& spec, std::ostream& out, std::span<const Matrix> mats);

}  // namespace growthlab
