#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "growthlab/matrix.hpp"

namespace growthlab::detail {

struct ExploreLimits {
  std::uint64_t max_elements = 100'000'000;
  std::uint64_t memory_cap = UINT64_MAX;
  /// Stop as soon as this many elements are visited (0: run to completion).
  std::uint64_t stop_at = 0;
  unsigned threads = 1;
  /// Keep the visited elements (sorted canonically) in the result.
  bool collect = false;
};

struct ExploreResult {
  /// layer_sizes[r] = number of elements at distance exactly r from 1.
  std::vector<std::uint64_t> layer_sizes;
  std::uint64_t total = 0;
  bool stopped_early = false;
  std::vector<Matrix> elements;
};

/// Breadth-first search of the Cayley graph x -> s x (s in gens) from the
/// identity. Uses packed word keys when the spec allows, byte strings otherwise.
ExploreResult explore_layers(const GroupSpec& spec, std::span<const Matrix> gens,
                             const ExploreLimits& limits);

}  // namespace growthlab::detail
