#pragma once

#include <cstdint>

namespace growthlab {

/// Memory budget for large exact computations (visited sets, product sets).
/// Defaults to 2 GiB; the GROWTHLAB_CAP_BYTES environment variable overrides it.
std::uint64_t default_memory_cap_bytes();

/// Default cap on distinct elements produced by one product or visited by one BFS.
inline constexpr std::uint64_t kDefaultElementCap = 100'000'000;

}  // namespace growthlab
