#pragma once

#include <cstdint>
#include <vector>

#include "growthlab/groupset.hpp"
#include "growthlab/verdict.hpp"

namespace growthlab {

/// Cumulative ball sizes |S^{<=r}| of a Cayley graph around the identity.
struct BallProfile {
  std::vector<int> radii;
  std::vector<std::uint64_t> sizes;
  int diameter = 0;
};

/// Exact diameter by breadth-first search from the identity over x -> s x.
/// Throws NotSymmetric, NotGenerating, SizeLimitExceeded or MemoryCapExceeded.
BallProfile bfs_diameter(const GenSet& s, const SetLimits& limits = {});

/// Diameter by meet in the middle: the least d with B_ceil(d/2) * B_floor(d/2) = G,
/// where the balls B_r are grown with explicit product sets.
int bidir_diameter(const GenSet& s, const SetLimits& limits = {});

/// |SA \ A| / |A|.
Rational boundary_expansion(const GenSet& a, const GenSet& s, const SetLimits& limits = {});

/// diameter <= (ln |G|)^c.
Verdict polylog_check(const BallProfile& profile, const GroupSpec& spec, double c);

}  // namespace growthlab
