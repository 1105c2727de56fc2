#include "growthlab/groupset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <unordered_set>

#include "growthlab/detail/explore.hpp"
#include "growthlab/detail/keyset.hpp"
#include "growthlab/error.hpp"

namespace growthlab {

GenSet::GenSet(GroupSpec spec, std::vector<Matrix> elements)
    : GenSet(std::move(spec), std::move(elements), false) {}

GenSet::GenSet(GroupSpec spec, std::vector<Matrix> elements, bool trusted)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
  if (trusted) return;
  for (const auto& m : elements_) {
    if (!spec_.contains(m)) {
      throw Error(Errc::SpecMismatch, "matrix " + (m.n() == spec_.n() ? spec_.format(m) : std::string("of wrong size")) +
                                          " is not an element of " + spec_.literal());
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

GenSet GenSet::from_canonical(GroupSpec spec, std::vector<Matrix> elements) {
  return GenSet(std::move(spec), std::move(elements), true);
}

bool GenSet::contains(const Matrix& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m);
}

bool GenSet::contains_identity() const { return contains(spec_.identity()); }

bool GenSet::is_symmetric() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Matrix& m) { return contains(spec_.inverse(m)); });
}

bool GenSet::is_subset_of(const GenSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

namespace {

void check_same_spec(const GenSet& a, const GenSet& b) {
  if (!(a.spec() == b.spec())) {
    throw Error(Errc::SpecMismatch, a.spec().literal() + " vs " + b.spec().literal());
  }
}

[[noreturn]] void too_many(std::uint64_t cap) {
  throw Error(Errc::SizeLimitExceeded, "product set exceeds " + std::to_string(cap) + " elements");
}

// Multiplies a[begin, end) by all of b, handing each product key to sink.
// Returns false when sink asks to stop.
template <class KeyFn, class Sink>
bool multiply_range(const GroupSpec& spec, const GenSet& a, const GenSet& b, std::size_t begin,
                    std::size_t end, KeyFn key, Sink sink) {
  Matrix tmp = spec.zero_matrix();
  for (std::size_t i = begin; i < end; ++i) {
    for (const auto& y : b) {
      spec.mul_into(a[i], y, tmp);
      if (!sink(key(tmp))) return false;
    }
  }
  return true;
}

template <class Key, class KeyFn, class Insert>
void multiply_all(const GroupSpec& spec, const GenSet& a, const GenSet& b, const SetLimits& limits,
                  KeyFn key, Insert insert) {
  const unsigned threads = std::max(1u, limits.threads);
  if (threads == 1 || a.size() < 2 * threads) {
    multiply_range(spec, a, b, 0, a.size(), key, insert);
    return;
  }
  // Each worker buffers its products; the caller's set absorbs them in thread order.
  std::vector<std::vector<Key>> parts(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (a.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(a.size(), t * chunk);
    const std::size_t hi = std::min(a.size(), lo + chunk);
    pool.emplace_back([&, t, lo, hi] {
      multiply_range(spec, a, b, lo, hi, key, [&](Key k) {
        parts[t].push_back(std::move(k));
        return true;
      });
    });
  }
  for (auto& th : pool) th.join();
  for (auto& part : parts) {
    for (auto& k : part) {
      if (!insert(std::move(k))) return;
    }
  }
}

// Distinct products, optionally collected. Stops once `stop_at` distinct keys are seen.
struct ProductRun {
  std::uint64_t count = 0;
  std::vector<Matrix> elements;
};

ProductRun run_product(const GenSet& a, const GenSet& b, const SetLimits& limits,
                       std::uint64_t stop_at, bool collect) {
  check_same_spec(a, b);
  const GroupSpec& spec = a.spec();
  ProductRun out;
  if (a.empty() || b.empty()) return out;
  const std::uint64_t bound = static_cast<std::uint64_t>(a.size()) * b.size();
  if (spec.packable()) {
    const std::size_t expected = static_cast<std::size_t>(std::min<std::uint64_t>(bound, 1u << 20));
    detail::PackedKeySet set(expected, limits.memory_cap);
    multiply_all<std::uint64_t>(
        spec, a, b, limits, [&](const Matrix& m) { return spec.pack(m); },
        [&](std::uint64_t k) {
          if (set.insert(k) && set.size() > limits.max_elements) too_many(limits.max_elements);
          return stop_at == 0 || set.size() < stop_at;
        });
    out.count = set.size();
    if (collect) {
      auto keys = set.keys();
      std::sort(keys.begin(), keys.end());
      out.elements.reserve(keys.size());
      for (auto k : keys) out.elements.push_back(spec.unpack(k));
    }
  } else {
    std::unordered_set<std::string> set;
    std::uint64_t bytes = 0;
    multiply_all<std::string>(
        spec, a, b, limits, [&](const Matrix& m) { return spec.encode(m); },
        [&](std::string k) {
          const std::size_t len = k.size();
          if (set.insert(std::move(k)).second) {
            if (set.size() > limits.max_elements) too_many(limits.max_elements);
            bytes += len + 64;
            if (bytes > limits.memory_cap) {
              throw Error(Errc::MemoryCapExceeded, "product set exceeds the memory cap");
            }
          }
          return stop_at == 0 || set.size() < stop_at;
        });
    out.count = set.size();
    if (collect) {
      std::vector<std::string> keys(set.begin(), set.end());
      std::sort(keys.begin(), keys.end());
      out.elements.reserve(keys.size());
      for (const auto& k : keys) out.elements.push_back(spec.decode(k));
    }
  }
  return out;
}

}  // namespace

GenSet product_set(const GenSet& a, const GenSet& b, const SetLimits& limits) {
  auto run = run_product(a, b, limits, 0, true);
  return GenSet::from_canonical(a.spec(), std::move(run.elements));
}

std::uint64_t product_size(const GenSet& a, const GenSet& b, std::uint64_t stop_at,
                           const SetLimits& limits) {
  return run_product(a, b, limits, stop_at, false).count;
}

GenSet power_set(const GenSet& alpha, int m, const SetLimits& limits) {
  if (m < 1) throw Error(Errc::InvalidArgument, "power_set needs m >= 1");
  GenSet acc = alpha;
  for (int i = 1; i < m; ++i) acc = product_set(acc, alpha, limits);
  return acc;
}

GenSet inverse_set(const GenSet& alpha) {
  std::vector<Matrix> inv;
  inv.reserve(alpha.size());
  for (const auto& m : alpha) inv.push_back(alpha.spec().inverse(m));
  std::sort(inv.begin(), inv.end());
  return GenSet::from_canonical(alpha.spec(), std::move(inv));
}

GenSet symmetrize(const GenSet& alpha) {
  GenSet s = set_union(alpha, inverse_set(alpha));
  return set_union(s, GenSet::identity_set(alpha.spec()));
}

GenSet set_union(const GenSet& a, const GenSet& b) {
  check_same_spec(a, b);
  std::vector<Matrix> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return GenSet::from_canonical(a.spec(), std::move(out));
}

GenSet set_intersection(const GenSet& a, const GenSet& b) {
  check_same_spec(a, b);
  std::vector<Matrix> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return GenSet::from_canonical(a.spec(), std::move(out));
}

std::size_t intersection_size(const GenSet& a, const GenSet& b) {
  check_same_spec(a, b);
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

GenSet set_difference(const GenSet& a, const GenSet& b) {
  check_same_spec(a, b);
  std::vector<Matrix> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return GenSet::from_canonical(a.spec(), std::move(out));
}

GenSet translate(const GenSet& alpha, const Matrix& g, bool left) {
  std::vector<Matrix> out;
  out.reserve(alpha.size());
  for (const auto& m : alpha) out.push_back(left ? alpha.spec().mul(g, m) : alpha.spec().mul(m, g));
  return GenSet(alpha.spec(), std::move(out));
}

GenSet conjugate_set(const GenSet& alpha, const Matrix& g) {
  std::vector<Matrix> out;
  out.reserve(alpha.size());
  for (const auto& m : alpha) out.push_back(alpha.spec().conjugate(g, m));
  return GenSet(alpha.spec(), std::move(out));
}

Generation generates(const GenSet& alpha, const SetLimits& limits) {
  const std::uint64_t order = alpha.spec().order_u64();
  detail::ExploreLimits el;
  el.max_elements = limits.max_elements;
  el.memory_cap = limits.memory_cap;
  el.threads = limits.threads;
  el.stop_at = order;
  const auto res = detail::explore_layers(alpha.spec(), alpha.elements(), el);
  return {res.total == order, res.total};
}

GenSet subgroup_closure(const GenSet& alpha, const SetLimits& limits) {
  detail::ExploreLimits el;
  el.max_elements = limits.max_elements;
  el.memory_cap = limits.memory_cap;
  el.threads = limits.threads;
  el.collect = true;
  auto res = detail::explore_layers(alpha.spec(), alpha.elements(), el);
  return GenSet::from_canonical(alpha.spec(), std::move(res.elements));
}

GenSet enumerate_group(const GroupSpec& spec, std::uint64_t max_scan) {
  const std::uint64_t q = spec.field().q();
  const int cells = spec.n() * spec.n();
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) {
    if (total > max_scan / q) {
      throw Error(Errc::SizeLimitExceeded, "enumerating " + spec.literal() + " needs more than " +
                                               std::to_string(max_scan) + " matrices");
    }
    total *= q;
  }
  std::vector<Matrix> out;
  Matrix m = spec.zero_matrix();
  // Odometer over row-major entries with the last entry fastest: canonical order.
  for (std::uint64_t c = 0; c < total; ++c) {
    if (spec.contains(m)) out.push_back(m);
    for (int i = cells - 1; i >= 0; --i) {
      Fq& e = m(i / spec.n(), i % spec.n());
      if (++e.code < q) break;
      e.code = 0;
    }
  }
  return GenSet::from_canonical(spec, std::move(out));
}

Matrix random_element(const GroupSpec& spec, Rng& rng) {
  const Field& f = spec.field();
  const int n = spec.n();
  Matrix m = spec.zero_matrix();
  Fq d;
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = Fq{static_cast<std::uint32_t>(rng.below(f.q()))};
    }
    d = spec.det(m);
  } while (d == f.zero());
  if (spec.family() == Family::SL) {
    const Fq s = f.inv(d);
    for (int j = 0; j < n; ++j) m(0, j) = f.mul(m(0, j), s);
  }
  return m;
}

GenSet random_subset(const GroupSpec& spec, std::size_t count, Rng& rng) {
  const std::uint64_t order = spec.order_u64();
  if (count > order) throw Error(Errc::InvalidArgument, "subset larger than the group");
  if (count * 2 > order) {
    // Dense request: shuffle the whole group and take a prefix.
    auto all = enumerate_group(spec).elements();
    for (std::size_t i = 0; i < count; ++i) {
      std::swap(all[i], all[i + rng.below(all.size() - i)]);
    }
    all.resize(count);
    return GenSet(spec, std::move(all));
  }
  std::vector<Matrix> picked;
  std::vector<Matrix> sorted;
  while (picked.size() < count) {
    Matrix m = random_element(spec, rng);
    auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
    if (it != sorted.end() && *it == m) continue;
    sorted.insert(it, m);
    picked.push_back(std::move(m));
  }
  return GenSet::from_canonical(spec, std::move(sorted));
}

ProductStats growth_stats(const GenSet& alpha, const SetLimits& limits) {
  ProductStats s;
  const GenSet a2 = product_set(alpha, alpha, limits);
  s.size1 = alpha.size();
  s.size2 = a2.size();
  s.size3 = product_size(a2, alpha, 0, limits);
  if (s.size1 > 0) s.tripling = Rational(s.size3, s.size1);
  if (s.size1 > 1) {
    s.exponent = std::log(static_cast<double>(s.size3)) / std::log(static_cast<double>(s.size1)) - 1.0;
  }
  s.saturated = BigInt(s.size3) == alpha.spec().order();
  return s;
}

double concentration_from_count(std::uint64_t count, int dim) {
  if (dim < 1) throw Error(Errc::ZeroDimension, "concentration needs a positive dimension");
  if (count == 0) return -std::numeric_limits<double>::infinity();
  return std::log(static_cast<double>(count)) / dim;
}

double concentration(const GenSet& alpha, const GenSet& x, int dim) {
  if (dim < 1) throw Error(Errc::ZeroDimension, "concentration needs a positive dimension");
  return concentration_from_count(intersection_size(alpha, x), dim);
}

bool is_subgroup(const GenSet& h) {
  if (h.empty()) return false;
  Matrix tmp = h.spec().zero_matrix();
  for (const auto& x : h) {
    for (const auto& y : h) {
      h.spec().mul_into(x, y, tmp);
      if (!h.contains(tmp)) return false;
    }
  }
  return true;
}

bool is_normalized_by(const GenSet& h, const GenSet& gens) {
  check_same_spec(h, gens);
  for (const auto& g : gens) {
    const Matrix gi = h.spec().inverse(g);
    for (const auto& x : h) {
      if (!h.contains(h.spec().mul(h.spec().mul(g, x), gi))) return false;
    }
  }
  return true;
}

}  // namespace growthlab
