#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/groupset.hpp"
#include "growthlab/verdict.hpp"

namespace growthlab {

/// |alpha beta| >= min(|beta| + |alpha|/2, |G|), the same with beta = alpha^2,
/// and alpha^3 = G or |alpha^3| >= 2|alpha|. Needs 1 in alpha and alpha generating.
Verdict check_olson(const GenSet& alpha, const GenSet& beta, const SetLimits& limits = {});

/// a) |sym(alpha)^3| / |alpha| <= (3 |alpha^3| / |alpha|)^3 for any alpha.
/// b) |alpha^m| / |alpha| <= (|alpha^3| / |alpha|)^(m-2) for symmetric alpha with 1, m >= 3.
Verdict check_ruzsa(const GenSet& alpha, int m, const SetLimits& limits = {});

/// If k |alpha||beta||gamma| > |G|^3 then alpha beta gamma = G; otherwise no claim.
Verdict check_gowers(const GenSet& alpha, const GenSet& beta, const GenSet& gamma, std::uint64_t k,
                     const SetLimits& limits = {});

/// ceil((q-1)/2), a lower bound for the least nontrivial complex representation
/// degree of PSL(n,q). SL only (UnsupportedFamily), q >= 4 (UnsupportedSpec).
std::uint64_t min_rep_degree(const GroupSpec& spec);

/// mu(alpha^2, hH) >= mu(alpha, H) and mu(alpha^2, H) >= mu(alpha, hH), compared
/// through the intersection counts (the dimension is shared).
Verdict check_coset_concentration(const GenSet& alpha, const GenSet& h_group, const Matrix& h, int dim,
                                  const SetLimits& limits = {});

/// |alpha^4| / |alpha| >= |~alpha^3| / |~alpha| in G/N, and for symmetric alpha with 1
/// also (|alpha^3| / |alpha|)^2 >= |~alpha^3| / |~alpha|. Normality of N is checked
/// against `group_generators`.
Verdict check_quotient_growth(const GenSet& alpha, const GenSet& n, const GenSet& group_generators,
                              const SetLimits& limits = {});

/// The closure of alpha^(2t) ∩ H is H, for H normal of index t. Skipped
/// (hypothesis_met = false) when t exceeds max_index.
Verdict check_schreier(const GenSet& alpha, const GenSet& h, std::uint64_t max_index = 16,
                       const SetLimits& limits = {});

/// |alpha^(k+1)| / |alpha| >= |alpha^k ∩ A| / |alpha^-1 alpha ∩ A|, for 1 in alpha.
Verdict check_subgroup_growth(const GenSet& alpha, const GenSet& a, int k, const SetLimits& limits = {});

/// max_g |alpha ∩ gP| / |P| >= |alpha| / |alpha^(k+1)|, for P inside alpha^k.
/// The witness is the least element of the maximizing coset.
Verdict check_max_coset(const GenSet& alpha, const GenSet& p, int k, const SetLimits& limits = {});

struct FreimanResult {
  GenSet s;
  Matrix x;
};

/// When |alpha alpha| < 3/2 |alpha|: S = alpha alpha^-1 with alpha ⊆ Sx = xS, all
/// verified (StructureViolated otherwise); x = 1 when 1 is in alpha. Returns nothing
/// when the hypothesis fails.
std::optional<FreimanResult> freiman_detect(const GenSet& alpha, const SetLimits& limits = {});

/// Elements g of the group with g H g^-1 = H, found by scanning `group`.
GenSet normalizer(const GenSet& h, const GenSet& group);

/// Seeded batch of one checker on generated inputs.
struct SuiteResult {
  std::string name;
  std::string group;
  std::uint64_t cases = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violations = 0;
  std::vector<Verdict> verdicts;
};

/// Suite names: olson, ruzsa, gowers, coset, quotient, schreier, subgroup_growth,
/// max_coset, freiman. Each uses its canonical group (SL(2,5), SL(2,7) or GL(2,5))
/// unless `group` is given. Case i uses derive_seed(seed, i).
SuiteResult run_suite(const std::string& name, std::uint64_t cases, std::uint64_t seed,
                      const std::string& group = "");
std::vector<std::string> suite_names();

}  // namespace growthlab
