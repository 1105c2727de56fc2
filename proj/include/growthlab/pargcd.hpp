#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/field.hpp"
#include "growthlab/numeric.hpp"

namespace growthlab::pargcd {

inline constexpr int kMaxParams = 4;
inline constexpr int kMaxTDegree = 8;
/// Root-count label for classes on which every polynomial vanishes identically.
inline constexpr int kInfinite = -1;

/// Monomial z_1^e_1 ... z_k^e_k packed 16 bits per exponent, z_1 most significant,
/// so word order is lexicographic with z_1 > z_2 > ...
using Monomial = std::uint64_t;

/// Sparse polynomial in the parameters: terms sorted by monomial, no zero coefficients.
struct MPoly {
  std::vector<std::pair<Monomial, Fq>> terms;
  bool is_zero() const { return terms.empty(); }
  friend auto operator<=>(const MPoly&, const MPoly&) = default;
  friend bool operator==(const MPoly&, const MPoly&) = default;
};

/// Polynomial in t with MPoly coefficients, constant term first, no trailing zeros.
using TPoly = std::vector<MPoly>;

/// Arithmetic in F_q[z_1..z_k] and F_q[z][t].
class Ring {
 public:
  Ring(Field field, int k);
  const Field& field() const { return field_; }
  int k() const { return k_; }

  MPoly constant(Fq c) const;
  MPoly variable(int i) const;
  MPoly add(const MPoly& a, const MPoly& b) const;
  MPoly sub(const MPoly& a, const MPoly& b) const;
  MPoly neg(const MPoly& a) const;
  MPoly scale(const MPoly& a, Fq c) const;
  MPoly mul(const MPoly& a, const MPoly& b) const;
  bool is_constant(const MPoly& a) const { return a.terms.size() == 1 && a.terms[0].first == 0; }
  /// Scaled so the coefficient of the largest monomial is 1.
  MPoly normalize(const MPoly& a) const;
  Fq eval(const MPoly& a, std::span<const Fq> z) const;
  int total_degree(const MPoly& a) const;
  int exponent(Monomial m, int i) const { return static_cast<int>((m >> (16 * (kMaxParams - 1 - i))) & 0xffff); }

  TPoly tadd(const TPoly& a, const TPoly& b) const;
  TPoly tsub(const TPoly& a, const TPoly& b) const;
  TPoly tmul(const TPoly& a, const TPoly& b) const;
  TPoly tscale(const TPoly& a, const MPoly& c) const;
  /// Multiplies by t^s.
  TPoly tshift(const TPoly& a, int s) const;
  TPoly derivative(const TPoly& a) const;
  /// Specializes the parameters at z; result constant first, trimmed.
  std::vector<Fq> specialize(const TPoly& a, std::span<const Fq> z) const;

  std::string format(const MPoly& a) const;
  std::string format(const TPoly& a) const;

 private:
  Field field_;
  int k_;
};

void trim(TPoly& a);
inline int tdegree(const TPoly& a) { return static_cast<int>(a.size()) - 1; }

struct ParamFamily {
  Field field;
  int k = 1;
  std::vector<TPoly> polys;

  /// Largest t-degree (0 for an empty or all-zero family).
  int d() const;
  /// Largest total parameter degree of any coefficient.
  int e() const;
  /// Largest total degree in t and the parameters together.
  int total_degree() const;
};

/// Text format: one polynomial per line in t and z1..zk with integer coefficients,
/// e.g. "1*t^2 + (4+z1)*t^0" or "t^2 - z1". '#' starts a comment. Directive lines
/// "field = GF(5)" and "params = 2" set the field and k; the arguments are defaults.
ParamFamily parse_family(std::string_view text, std::optional<Field> field = std::nullopt,
                         std::optional<int> k = std::nullopt);
std::string format_family(const ParamFamily& fam);

struct Condition {
  MPoly poly;
  bool vanishes = false;
  friend bool operator==(const Condition&, const Condition&) = default;
};

struct PartitionClass {
  std::vector<Condition> conditions;
  /// Uniform gcd on the class, up to a unit. Empty when every polynomial vanishes.
  TPoly gcd;
  /// Distinct roots of the gcd in the algebraic closure, or kInfinite. Set by
  /// root_count_refinement; parametric_partition leaves the gcd degree bound here.
  int label = 0;
};

/// Simultaneous Euclid over the parameter space: branch on which leading
/// t-coefficients vanish, divide uniformly, recurse on remainders. Throws
/// DegreeCapExceeded beyond t-degree 8 or 4 parameters.
std::vector<PartitionClass> parametric_partition(const ParamFamily& fam);

/// Splits each class by the number of distinct closure roots of its gcd,
/// using uniform gcd(P, P') branching and p-th root descent when P' vanishes.
std::vector<PartitionClass> root_count_refinement(const ParamFamily& fam,
                                                  const std::vector<PartitionClass>& classes);

struct OracleResult {
  /// Monic gcd of the specialized family; empty when all specializations are zero.
  std::vector<Fq> gcd;
  int gcd_degree = -1;
  int root_count = kInfinite;
};

/// Independent pointwise answer: specialize, run plain Euclid, count distinct
/// closure roots as deg gcd(G, t^(q^L) - t) with L = lcm(1..deg G).
OracleResult brute_force_oracle(const ParamFamily& fam, std::span<const Fq> z);

struct VerifyReport {
  std::uint64_t points = 0;
  std::uint64_t classes = 0;
  std::uint64_t empty_classes = 0;
  std::uint64_t uncovered = 0;
  std::uint64_t overlaps = 0;
  std::uint64_t gcd_mismatches = 0;
  std::uint64_t label_mismatches = 0;
  /// (D+2)^((D+1)^(k+2)) with D the largest total degree in t and z.
  BigInt class_bound;
  bool within_bound = false;
  std::string first_mismatch;

  bool ok() const {
    return uncovered == 0 && overlaps == 0 && gcd_mismatches == 0 && label_mismatches == 0 && within_bound;
  }
};

/// Checks refined classes against the oracle at every point of F_q^k
/// (SizeLimitExceeded above 10^5 points). With throw_on_mismatch, any
/// disagreement raises MismatchFound.
VerifyReport verify_partition(const ParamFamily& fam, const std::vector<PartitionClass>& refined,
                              bool throw_on_mismatch = false);
/// Partition, refine and verify.
VerifyReport verify_partition(const ParamFamily& fam, bool throw_on_mismatch = false);

/// Two polynomials of t-degree at most max_t_degree with sparse coefficients:
/// zero, a constant, or one or two monomials of parameter degree at most 2.
ParamFamily random_family(const Field& field, int k, int max_t_degree, Rng& rng);

}  // namespace growthlab::pargcd
