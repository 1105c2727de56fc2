#include "growthlab/cayley.hpp"

#include <cmath>

#include "growthlab/detail/explore.hpp"
#include "growthlab/error.hpp"

namespace growthlab {

namespace {

void require_symmetric(const GenSet& s) {
  if (s.empty()) throw Error(Errc::NotGenerating, "empty generating set");
  if (!s.is_symmetric()) throw Error(Errc::NotSymmetric, "generating set is not inverse-closed");
}

}  // namespace

BallProfile bfs_diameter(const GenSet& s, const SetLimits& limits) {
  require_symmetric(s);
  const std::uint64_t order = s.spec().order_u64();
  detail::ExploreLimits el;
  el.max_elements = limits.max_elements;
  el.memory_cap = limits.memory_cap;
  el.threads = limits.threads;
  const auto res = detail::explore_layers(s.spec(), s.elements(), el);
  if (res.total != order) {
    throw Error(Errc::NotGenerating, "BFS stalled at " + std::to_string(res.total) + " of " +
                                         std::to_string(order) + " elements");
  }
  BallProfile p;
  std::uint64_t acc = 0;
  for (std::size_t r = 0; r < res.layer_sizes.size(); ++r) {
    acc += res.layer_sizes[r];
    p.radii.push_back(static_cast<int>(r));
    p.sizes.push_back(acc);
  }
  p.diameter = static_cast<int>(res.layer_sizes.size()) - 1;
  return p;
}

int bidir_diameter(const GenSet& s, const SetLimits& limits) {
  require_symmetric(s);
  const std::uint64_t order = s.spec().order_u64();
  std::vector<GenSet> balls{GenSet::identity_set(s.spec())};
  for (int d = 0;; ++d) {
    const int a = (d + 1) / 2;
    const int b = d / 2;
    while (static_cast<int>(balls.size()) <= a) {
      const GenSet& last = balls.back();
      GenSet next = set_union(last, product_set(s, last, limits));
      if (next.size() == last.size()) {
        throw Error(Errc::NotGenerating, "ball growth stalled at " + std::to_string(last.size()) +
                                             " of " + std::to_string(order) + " elements");
      }
      balls.push_back(std::move(next));
    }
    // A product of sizes below |G| cannot cover the group.
    if (static_cast<std::uint64_t>(balls[a].size()) * balls[b].size() < order) continue;
    if (product_size(balls[a], balls[b], order, limits) == order) return d;
  }
}

Rational boundary_expansion(const GenSet& a, const GenSet& s, const SetLimits& limits) {
  if (!(a.spec() == s.spec())) throw Error(Errc::SpecMismatch, "sets from different groups");
  if (a.empty()) throw Error(Errc::InvalidArgument, "boundary expansion of an empty set");
  const GenSet sa = product_set(s, a, limits);
  return Rational(sa.size() - intersection_size(sa, a), a.size());
}

Verdict polylog_check(const BallProfile& profile, const GroupSpec& spec, double c) {
  Verdict v;
  v.check = "polylog_diameter";
  const double log_order = std::log(spec.order().convert_to<double>());
  const double bound = std::pow(log_order, c);
  v.add(make_clause("diameter <= (ln|G|)^c", Rational(profile.diameter), "<=", Rational(bound)));
  return v;
}

}  // namespace growthlab
