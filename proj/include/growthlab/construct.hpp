#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/groupset.hpp"

namespace growthlab {

enum class ExampleVariant { Dense, Moderate };

/// dense: A = H ∪ {a,b,c,s} in SL(n,q). moderate: A = P ∪ {a,b,c,s} in SL(n,2^p).
struct ExampleSpec {
  ExampleVariant variant = ExampleVariant::Dense;
  int n = 3;
  /// Field size for dense; the exponent p (q = 2^p) for moderate.
  std::uint32_t q_or_p = 3;

  /// "dense:n=3,q=3" or "moderate:n=3,p=5".
  static ExampleSpec parse(std::string_view text);
  std::string literal() const;
};

struct ExampleSet {
  GroupSpec spec;
  GenSet set;
  /// H (dense) or P (moderate).
  GenSet diagonal_part;
  Matrix a, b, c, s;
  /// Least primitive element of the field.
  Fq g;
};

/// Elementary matrix I + t e_ij.
Matrix elementary(const GroupSpec& spec, int i, int j, Fq t);
/// Diagonal matrix with the given entries.
Matrix diagonal(const GroupSpec& spec, const std::vector<Fq>& entries);
/// The n-cycle permutation matrix (s e_i = e_{i+1}), with the (0, n-1) entry
/// negated when n is even so that det = 1.
Matrix cycle_matrix(const GroupSpec& spec);
/// All diagonal matrices of determinant 1.
GenSet diagonal_subgroup(const GroupSpec& spec);

ExampleSet example_generating_set(const ExampleSpec& ex);
/// P = s-conjugation closure of { diag(g^e_1, ..., g^e_{n-1}, *) : 1 <= e_i <= n }.
ExampleSet moderate_growth_set(int n, std::uint32_t p);

/// Presets: "transvections", "weyl_plus_transvection". Symmetrized, generation verified.
GenSet standard_generators(const GroupSpec& spec, std::string_view preset);

/// alpha with its inverses and 1, where alpha is `size` distinct uniform elements.
GenSet random_symmetric_set(const GroupSpec& spec, std::size_t size, Rng& rng);
/// Rejection-samples random_symmetric_set until it generates. Throws GaveUp.
GenSet random_generating_set(const GroupSpec& spec, std::size_t size, std::uint64_t seed,
                             int max_attempts = 1000);

struct GenerationCertificate {
  bool certified = false;
  std::string method;
  /// Number of (i, j) positions whose elementary transvections were all reached.
  int positions_complete = 0;
  /// For GL: order of the subgroup of F_q^* generated by the determinants.
  std::uint64_t det_subgroup_order = 0;
};

/// Proves <alpha> is the whole group without enumerating it: collects
/// elementary transvections that provably lie in <alpha> (from the closure of
/// the generators supported on the top-left 2x2 block, conjugation by
/// generators, and commutators) until every x_ij(t) is reached. For GL the
/// determinants must also generate F_q^*.
GenerationCertificate certify_generation(const GenSet& alpha, const SetLimits& limits = {});

/// Exhaustive closure when the group order is at most closure_cap, otherwise certify_generation.
bool verify_generation(const GenSet& alpha, std::uint64_t closure_cap = 2'000'000,
                       const SetLimits& limits = {});

}  // namespace growthlab
