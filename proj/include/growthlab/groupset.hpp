#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "growthlab/limits.hpp"
#include "growthlab/matrix.hpp"
#include "growthlab/numeric.hpp"

namespace growthlab {

/// A finite subset of a matrix group, deduplicated and kept in canonical order.
class GenSet {
 public:
  /// Sorts and deduplicates; every element must lie in the group.
  GenSet(GroupSpec spec, std::vector<Matrix> elements);
  static GenSet empty(GroupSpec spec) { return GenSet(std::move(spec), {}); }
  static GenSet identity_set(const GroupSpec& spec) { return GenSet(spec, {spec.identity()}); }
  /// Trusts the caller: elements already sorted, unique and in the group.
  static GenSet from_canonical(GroupSpec spec, std::vector<Matrix> elements);

  const GroupSpec& spec() const { return spec_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const Matrix& m) const;
  bool contains_identity() const;
  bool is_symmetric() const;
  bool is_subset_of(const GenSet& other) const;

  bool operator==(const GenSet& o) const { return spec_ == o.spec_ && elements_ == o.elements_; }

 private:
  GenSet(GroupSpec spec, std::vector<Matrix> elements, bool trusted);
  GroupSpec spec_;
  std::vector<Matrix> elements_;
};

struct SetLimits {
  std::uint64_t max_elements = kDefaultElementCap;
  std::uint64_t memory_cap = default_memory_cap_bytes();
  unsigned threads = 1;
};

/// {ab : a in A, b in B}. Throws SpecMismatch or SizeLimitExceeded.
GenSet product_set(const GenSet& a, const GenSet& b, const SetLimits& limits = {});
/// |AB|, stopping early once the count reaches stop_at (0: never).
std::uint64_t product_size(const GenSet& a, const GenSet& b, std::uint64_t stop_at = 0,
                           const SetLimits& limits = {});
/// Products of exactly m factors from alpha, m >= 1.
GenSet power_set(const GenSet& alpha, int m, const SetLimits& limits = {});

GenSet inverse_set(const GenSet& alpha);
/// alpha with its inverses and the identity.
GenSet symmetrize(const GenSet& alpha);
GenSet set_union(const GenSet& a, const GenSet& b);
GenSet set_intersection(const GenSet& a, const GenSet& b);
std::size_t intersection_size(const GenSet& a, const GenSet& b);
/// a \ b.
GenSet set_difference(const GenSet& a, const GenSet& b);
/// g * alpha (left = true) or alpha * g.
GenSet translate(const GenSet& alpha, const Matrix& g, bool left);
GenSet conjugate_set(const GenSet& alpha, const Matrix& g);

struct Generation {
  bool generates = false;
  std::uint64_t closure_size = 0;
};

/// Size of the subgroup generated by alpha, with early exit at the group order.
Generation generates(const GenSet& alpha, const SetLimits& limits = {});
/// The subgroup generated by alpha as an explicit set.
GenSet subgroup_closure(const GenSet& alpha, const SetLimits& limits = {});

/// Every element of the group, by direct scan of all q^(n^2) matrices.
/// Throws SizeLimitExceeded when that scan exceeds max_scan matrices.
GenSet enumerate_group(const GroupSpec& spec, std::uint64_t max_scan = 50'000'000);

/// Uniform random group element.
Matrix random_element(const GroupSpec& spec, Rng& rng);
/// `count` distinct uniform random elements.
GenSet random_subset(const GroupSpec& spec, std::size_t count, Rng& rng);

struct ProductStats {
  std::uint64_t size1 = 0, size2 = 0, size3 = 0;
  Rational tripling;
  /// ln|a^3| / ln|a| - 1; reported as 0 when |a| <= 1.
  double exponent = 0;
  bool saturated = false;
};

ProductStats growth_stats(const GenSet& alpha, const SetLimits& limits = {});

/// ln|alpha ∩ X| / dim; negative infinity for an empty intersection.
/// Throws ZeroDimension when dim < 1.
double concentration(const GenSet& alpha, const GenSet& x, int dim);
/// Same with a known intersection size.
double concentration_from_count(std::uint64_t count, int dim);

/// Nonempty and closed under products (hence a subgroup, being finite).
bool is_subgroup(const GenSet& h);
/// g h g^-1 in H for all h in H and g in gens.
bool is_normalized_by(const GenSet& h, const GenSet& gens);

}  // namespace growthlab
