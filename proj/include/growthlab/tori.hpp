#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "growthlab/groupset.hpp"
#include "growthlab/upoly.hpp"

namespace growthlab {

/// det(t I - M), monic of degree n.
UPoly charpoly(const GroupSpec& spec, const Matrix& m);

/// Squarefree characteristic polynomial. f' = 0 (f a p-th power) counts as not squarefree.
bool is_regular_semisimple(const GroupSpec& spec, const Matrix& m);

/// Solution space of X M = M X intersected with the group. Enumerates the
/// q^dim points of the solution space; allowed when dim <= n or q^dim <= 2401,
/// otherwise throws SubspaceTooLarge.
GenSet centralizer(const GroupSpec& spec, const Matrix& m);

enum class TorusKind { Split, Nonsplit, Other };
std::string to_string(TorusKind kind);

struct Torus {
  Matrix seed;
  GenSet elements;
  /// Regular semisimple elements of the torus.
  GenSet regular;
  TorusKind kind = TorusKind::Split;
  std::uint64_t order = 0;
  int dim = 1;
};

/// Every maximal torus of SL(2,q), q <= 64, or SL(3,q), q in {2,3}, as the
/// centralizer of its regular semisimple elements. Throws UnsupportedSpec.
std::vector<Torus> maximal_tori(const GroupSpec& spec);

struct TorusPartitionReport {
  std::uint64_t group_order = 0;
  std::uint64_t regular_count = 0;
  std::uint64_t tori = 0;
  std::map<std::string, std::uint64_t> kind_counts;
  /// Each regular element lies in exactly one torus's regular part.
  bool exactly_one = false;
  /// Union of regular parts is the set of regular semisimple elements.
  bool union_is_regular = false;
  /// Orders q-1 / q+1 (n = 2) or (q-1)^2, q^2-1, q^2+q+1 (n = 3) by kind.
  bool orders_match_kind = false;
  /// Each torus equals the centralizer of each of its regular elements,
  /// recomputed by scanning the whole group.
  bool centralizers_match = false;
  /// sum |T_r| + #non-regular = |G|.
  bool count_identity = false;

  bool ok() const {
    return exactly_one && union_is_regular && orders_match_kind && centralizers_match && count_identity;
  }
};

TorusPartitionReport verify_torus_partition(const GroupSpec& spec);

struct TorusRecord {
  TorusKind kind;
  std::uint64_t order;
  bool covered;
  std::uint64_t cap_alpha;
  std::uint64_t cap_alpha2;
  std::uint64_t cap_alpha2_regular;
  double mu_t;
  double mu_g;
};

struct DichotomyReport {
  std::vector<TorusRecord> tori;
  std::uint64_t alpha_size = 0;
  std::uint64_t covered = 0;
  /// |alpha|^(1/(n+1)) and |alpha|^(1/(n+1) - 1/(n^2-1)).
  double scale_torus = 0;
  double scale_torus_regular = 0;
  /// Histograms of |alpha alpha^-1 ∩ T| over covered and uncovered tori.
  std::map<std::uint64_t, std::uint64_t> covered_hist, uncovered_hist;
};

DichotomyReport dichotomy_report(const GenSet& alpha, const std::vector<Torus>& tori);
DichotomyReport dichotomy_report(const GenSet& alpha);

}  // namespace growthlab
