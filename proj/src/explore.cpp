#include "growthlab/detail/explore.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_set>

#include "growthlab/detail/keyset.hpp"
#include "growthlab/error.hpp"
#include "growthlab/limits.hpp"

namespace growthlab {

std::uint64_t default_memory_cap_bytes() {
  constexpr std::uint64_t kDefault = std::uint64_t{2} << 30;
  if (const char* env = std::getenv("GROWTHLAB_CAP_BYTES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefault;
}

namespace detail {

namespace {

struct PackedPolicy {
  using Key = std::uint64_t;
  const GroupSpec& spec;
  PackedKeySet set;

  PackedPolicy(const GroupSpec& s, std::uint64_t cap) : spec(s), set(1024, cap) {}
  Key key(const Matrix& m) const { return spec.pack(m); }
  Matrix matrix(Key k) const { return spec.unpack(k); }
  bool insert(Key k) { return set.insert(k); }
  std::size_t bytes() const { return set.bytes(); }
};

struct BytesPolicy {
  using Key = std::string;
  const GroupSpec& spec;
  std::unordered_set<std::string> set;
  std::uint64_t cap;
  std::size_t key_bytes = 0;

  BytesPolicy(const GroupSpec& s, std::uint64_t c) : spec(s), cap(c) {}
  Key key(const Matrix& m) const { return spec.encode(m); }
  Matrix matrix(const Key& k) const { return spec.decode(k); }
  bool insert(const Key& k) {
    key_bytes = k.size();
    const bool fresh = set.insert(k).second;
    if (fresh && bytes() > cap) throw Error(Errc::MemoryCapExceeded, "visited set exceeds the memory cap");
    return fresh;
  }
  std::size_t bytes() const { return set.size() * (key_bytes + 64); }
};

template <class Policy>
ExploreResult run(Policy& policy, const GroupSpec& spec, std::span<const Matrix> gens,
                  const ExploreLimits& limits) {
  using Key = typename Policy::Key;
  ExploreResult result;
  std::vector<Key> frontier{policy.key(spec.identity())};
  policy.insert(frontier.front());
  result.layer_sizes.push_back(1);
  result.total = 1;
  std::vector<Key> all;
  if (limits.collect) all.push_back(frontier.front());

  auto expand = [&](std::size_t begin, std::size_t end, std::vector<Key>& out) {
    Matrix tmp = spec.zero_matrix();
    for (std::size_t i = begin; i < end; ++i) {
      const Matrix x = policy.matrix(frontier[i]);
      for (const auto& s : gens) {
        spec.mul_into(s, x, tmp);
        out.push_back(policy.key(tmp));
      }
    }
  };

  auto reached_stop = [&] { return limits.stop_at != 0 && result.total >= limits.stop_at; };

  while (!frontier.empty() && !reached_stop()) {
    std::vector<Key> next;
    const unsigned threads = std::max(1u, limits.threads);
    if (threads == 1 || frontier.size() < 4096) {
      // Expand and dedup in one pass to keep memory flat.
      Matrix tmp = spec.zero_matrix();
      for (const auto& fk : frontier) {
        const Matrix x = policy.matrix(fk);
        for (const auto& s : gens) {
          spec.mul_into(s, x, tmp);
          Key k = policy.key(tmp);
          if (policy.insert(k)) {
            next.push_back(std::move(k));
            ++result.total;
            if (result.total > limits.max_elements) {
              throw Error(Errc::SizeLimitExceeded, "BFS visited more than the element cap");
            }
          }
        }
      }
    } else {
      std::vector<std::vector<Key>> parts(threads);
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t b = std::min(frontier.size(), t * chunk);
        const std::size_t e = std::min(frontier.size(), b + chunk);
        pool.emplace_back([&, t, b, e] { expand(b, e, parts[t]); });
      }
      for (auto& th : pool) th.join();
      for (auto& part : parts) {
        for (auto& k : part) {
          if (policy.insert(k)) {
            next.push_back(std::move(k));
            ++result.total;
            if (result.total > limits.max_elements) {
              throw Error(Errc::SizeLimitExceeded, "BFS visited more than the element cap");
            }
          }
        }
      }
    }
    if (next.empty()) break;
    result.layer_sizes.push_back(next.size());
    if (limits.collect) all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  result.stopped_early = !frontier.empty() && reached_stop();

  if (limits.collect) {
    std::sort(all.begin(), all.end());
    result.elements.reserve(all.size());
    for (const auto& k : all) result.elements.push_back(policy.matrix(k));
  }
  return result;
}

}  // namespace

ExploreResult explore_layers(const GroupSpec& spec, std::span<const Matrix> gens,
                             const ExploreLimits& limits) {
  if (spec.packable()) {
    PackedPolicy policy(spec, limits.memory_cap);
    return run(policy, spec, gens, limits);
  }
  BytesPolicy policy(spec, limits.memory_cap);
  return run(policy, spec, gens, limits);
}

}  // namespace detail
}  // namespace growthlab
