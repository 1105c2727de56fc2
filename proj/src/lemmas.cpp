#include "growthlab/lemmas.hpp"

#include <algorithm>
#include <map>

#include "growthlab/construct.hpp"
#include "growthlab/error.hpp"
#include "growthlab/tori.hpp"

namespace growthlab {

namespace {

Rational ratio(std::uint64_t a, std::uint64_t b) { return Rational(a, b); }

Rational rpow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// alpha^1 .. alpha^m; once a power is the whole group the rest are too.
std::vector<GenSet> powers(const GenSet& alpha, int m, const SetLimits& limits) {
  const BigInt order = alpha.spec().order();
  std::vector<GenSet> out{alpha};
  for (int j = 2; j <= m; ++j) {
    if (BigInt(out.back().size()) == order) {
      out.push_back(out.back());
    } else {
      out.push_back(product_set(out.back(), alpha, limits));
    }
  }
  return out;
}

void require_identity(const GenSet& alpha) {
  if (!alpha.contains_identity()) throw Error(Errc::IdentityMissing, "the set must contain 1");
}

void require_symmetric(const GenSet& alpha) {
  if (!alpha.is_symmetric()) throw Error(Errc::NotSymmetric, "the set must be inverse-closed");
}

void require_subgroup(const GenSet& h) {
  if (!is_subgroup(h)) throw Error(Errc::NotSubgroup, "the set is not a subgroup");
}

// Least element of the coset xH.
Matrix coset_min(const GroupSpec& spec, const Matrix& x, const GenSet& h) {
  Matrix best = spec.mul(x, h[0]);
  Matrix tmp = spec.zero_matrix();
  for (const auto& y : h) {
    spec.mul_into(x, y, tmp);
    if (tmp < best) best = tmp;
  }
  return best;
}

}  // namespace

Verdict check_olson(const GenSet& alpha, const GenSet& beta, const SetLimits& limits) {
  require_identity(alpha);
  if (beta.empty()) throw Error(Errc::InvalidArgument, "beta must be nonempty");
  if (!verify_generation(alpha)) throw Error(Errc::NotGenerating, "alpha does not generate the group");
  Verdict v;
  v.check = "olson";
  const Rational order(alpha.spec().order());
  const Rational a = alpha.size();
  const auto ab = product_size(alpha, beta, 0, limits);
  v.add(make_clause("|alpha beta| >= min(|beta| + |alpha|/2, |G|)", ab, ">=",
                    std::min(Rational(Rational(beta.size()) + a / 2), order)));
  const GenSet a2 = product_set(alpha, alpha, limits);
  const auto a3 = product_size(a2, alpha, 0, limits);
  v.add(make_clause("|alpha^3| >= min(|alpha^2| + |alpha|/2, |G|)", a3, ">=",
                    std::min(Rational(Rational(a2.size()) + a / 2), order)));
  // alpha^3 = G or |alpha^3| >= 2|alpha|, as |alpha^3| >= min(2|alpha|, |G|).
  v.add(make_clause("alpha^3 = G or |alpha^3| >= 2|alpha|", a3, ">=", std::min(Rational(2 * a), order)));
  return v;
}

Verdict check_ruzsa(const GenSet& alpha, int m, const SetLimits& limits) {
  if (alpha.empty()) throw Error(Errc::InvalidArgument, "alpha must be nonempty");
  Verdict v;
  v.check = "ruzsa";
  const auto a3 = power_set(alpha, 3, limits).size();
  const Rational t = ratio(a3, alpha.size());
  const auto sym3 = power_set(symmetrize(alpha), 3, limits).size();
  v.add(make_clause("|sym(alpha)^3|/|alpha| <= (3|alpha^3|/|alpha|)^3", ratio(sym3, alpha.size()), "<=",
                    rpow(Rational(3 * t), 3)));
  if (m < 3) {
    throw Error(Errc::InvalidArgument, "part b needs m >= 3 (it fails for m = 2 unless alpha^2 = alpha)");
  }
  require_symmetric(alpha);
  require_identity(alpha);
  const auto pw = powers(alpha, m, limits);
  v.add(make_clause("|alpha^m|/|alpha| <= (|alpha^3|/|alpha|)^(m-2)", ratio(pw[m - 1].size(), alpha.size()),
                    "<=", rpow(t, m - 2)));
  v.note = "m=" + std::to_string(m);
  return v;
}

Verdict check_gowers(const GenSet& alpha, const GenSet& beta, const GenSet& gamma, std::uint64_t k,
                     const SetLimits& limits) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
  Verdict v;
  v.check = "gowers";
  const BigInt order = alpha.spec().order();
  const BigInt lhs = BigInt(k) * alpha.size() * beta.size() * gamma.size();
  const BigInt cube = order * order * order;
  v.hypothesis_met = lhs > cube;
  if (!v.hypothesis_met) {
    v.note = "hypothesis not met";
    return v;
  }
  const auto stop = order.convert_to<std::uint64_t>();
  const auto size = product_size(product_set(alpha, beta, limits), gamma, stop, limits);
  v.add(make_clause("|alpha beta gamma| = |G|", size, "==", Rational(order)));
  return v;
}

std::uint64_t min_rep_degree(const GroupSpec& spec) {
  if (spec.family() != Family::SL) throw Error(Errc::UnsupportedFamily, "min_rep_degree needs an SL group");
  const std::uint64_t q = spec.field().q();
  if (q < 4) throw Error(Errc::UnsupportedSpec, "min_rep_degree needs q >= 4");
  return q / 2;
}

Verdict check_coset_concentration(const GenSet& alpha, const GenSet& h_group, const Matrix& h, int dim,
                                  const SetLimits& limits) {
  if (dim < 1) throw Error(Errc::ZeroDimension, "dimension must be positive");
  require_symmetric(alpha);
  require_subgroup(h_group);
  const GenSet coset = translate(h_group, h, true);
  if (intersection_size(coset, alpha) == 0) throw Error(Errc::EmptyIntersection, "hH does not meet alpha");
  const GenSet a2 = product_set(alpha, alpha, limits);
  Verdict v;
  v.check = "coset_concentration";
  v.add(make_clause("mu(alpha^2, hH) >= mu(alpha, H) [counts]", intersection_size(a2, coset), ">=",
                    intersection_size(alpha, h_group)));
  v.add(make_clause("mu(alpha^2, H) >= mu(alpha, hH) [counts]", intersection_size(a2, h_group), ">=",
                    intersection_size(alpha, coset)));
  v.witness = h;
  v.note = "dim=" + std::to_string(dim);
  return v;
}

Verdict check_quotient_growth(const GenSet& alpha, const GenSet& n, const GenSet& group_generators,
                              const SetLimits& limits) {
  if (alpha.empty()) throw Error(Errc::InvalidArgument, "alpha must be nonempty");
  if (!is_subgroup(n) || !is_normalized_by(n, group_generators)) {
    throw Error(Errc::NotNormal, "N is not a normal subgroup");
  }
  const GroupSpec& spec = alpha.spec();
  auto image = [&](const GenSet& s) {
    std::vector<Matrix> reps;
    reps.reserve(s.size());
    for (const auto& x : s) reps.push_back(coset_min(spec, x, n));
    return GenSet::from_canonical(spec, [&] {
      std::sort(reps.begin(), reps.end());
      reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
      return reps;
    }());
  };
  const auto pw = powers(alpha, 4, limits);
  const auto q1 = image(alpha).size();
  const auto q3 = image(pw[2]).size();
  const Rational quotient_tripling = ratio(q3, q1);
  Verdict v;
  v.check = "quotient";
  v.add(make_clause("|alpha^4|/|alpha| >= |~alpha^3|/|~alpha|", ratio(pw[3].size(), alpha.size()), ">=",
                    quotient_tripling));
  if (alpha.is_symmetric() && alpha.contains_identity()) {
    v.add(make_clause("(|alpha^3|/|alpha|)^2 >= |~alpha^3|/|~alpha|",
                      rpow(ratio(pw[2].size(), alpha.size()), 2), ">=", quotient_tripling));
  }
  return v;
}

Verdict check_schreier(const GenSet& alpha, const GenSet& h, std::uint64_t max_index, const SetLimits& limits) {
  require_symmetric(alpha);
  require_identity(alpha);
  if (!verify_generation(alpha)) throw Error(Errc::NotGenerating, "alpha does not generate the group");
  if (!is_subgroup(h) || !is_normalized_by(h, alpha)) throw Error(Errc::NotNormal, "H is not normal");
  const BigInt order = alpha.spec().order();
  Verdict v;
  v.check = "schreier";
  if (order % h.size() != 0) throw Error(Errc::NotSubgroup, "|H| does not divide |G|");
  const BigInt t = order / h.size();
  if (t > max_index) {
    v.hypothesis_met = false;
    v.note = "index " + t.str() + " above the configured maximum";
    return v;
  }
  const int two_t = 2 * t.convert_to<int>();
  const auto pw = powers(alpha, two_t, limits);
  const GenSet inside = set_intersection(pw.back(), h);
  const auto closure = generates(inside, limits).closure_size;
  // The closure of a subset of H lies in H, so equal sizes mean equal sets.
  v.add(make_clause("|<alpha^(2t) ∩ H>| = |H|", closure, "==", h.size()));
  v.note = "t=" + t.str();
  return v;
}

Verdict check_subgroup_growth(const GenSet& alpha, const GenSet& a, int k, const SetLimits& limits) {
  require_identity(alpha);
  require_subgroup(a);
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
  const auto pw = powers(alpha, k + 1, limits);
  const GenSet quotient = product_set(inverse_set(alpha), alpha, limits);
  Verdict v;
  v.check = "subgroup_growth";
  v.add(make_clause("|alpha^(k+1)|/|alpha| >= |alpha^k ∩ A|/|alpha^-1 alpha ∩ A|",
                    ratio(pw[k].size(), alpha.size()), ">=",
                    ratio(intersection_size(pw[k - 1], a), intersection_size(quotient, a))));
  v.note = "k=" + std::to_string(k);
  return v;
}

Verdict check_max_coset(const GenSet& alpha, const GenSet& p, int k, const SetLimits& limits) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be at least 1");
  if (alpha.empty() || p.empty()) throw Error(Errc::InvalidArgument, "sets must be nonempty");
  const auto pw = powers(alpha, k + 1, limits);
  if (!p.is_subset_of(pw[k - 1])) throw Error(Errc::PNotContained, "P is not contained in alpha^k");
  std::map<Matrix, std::uint64_t> per_coset;
  for (const auto& x : alpha) ++per_coset[coset_min(alpha.spec(), x, p)];
  auto best = per_coset.begin();
  for (auto it = per_coset.begin(); it != per_coset.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  Verdict v;
  v.check = "max_coset";
  v.add(make_clause("max_g |alpha ∩ gP|/|P| >= |alpha|/|alpha^(k+1)|", ratio(best->second, p.size()), ">=",
                    ratio(alpha.size(), pw[k].size())));
  v.witness = best->first;
  v.note = "k=" + std::to_string(k);
  return v;
}

std::optional<FreimanResult> freiman_detect(const GenSet& alpha, const SetLimits& limits) {
  if (alpha.empty()) throw Error(Errc::InvalidArgument, "alpha must be nonempty");
  const auto aa = product_size(alpha, alpha, 0, limits);
  if (2 * aa >= 3 * alpha.size()) return std::nullopt;
  GenSet s = product_set(alpha, inverse_set(alpha), limits);
  const Matrix x = alpha.contains_identity() ? alpha.spec().identity() : alpha[0];
  auto fail = [](const std::string& what) { throw Error(Errc::StructureViolated, what); };
  if (!is_subgroup(s) || !s.is_symmetric()) fail("alpha alpha^-1 is not a subgroup");
  if (s.size() != aa) fail("|alpha alpha^-1| differs from |alpha alpha|");
  const GenSet sx = translate(s, x, false);
  if (!alpha.is_subset_of(sx)) fail("alpha is not inside Sx");
  if (!(translate(s, x, true) == sx)) fail("xS differs from Sx");
  return FreimanResult{std::move(s), x};
}

GenSet normalizer(const GenSet& h, const GenSet& group) {
  std::vector<Matrix> out;
  for (const auto& g : group) {
    bool ok = true;
    for (const auto& x : h) {
      if (!h.contains(h.spec().conjugate(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return GenSet::from_canonical(group.spec(), std::move(out));
}

std::vector<std::string> suite_names() {
  return {"olson", "ruzsa", "gowers", "coset", "quotient", "schreier", "subgroup_growth", "max_coset", "freiman"};
}

namespace {

std::string default_group(const std::string& name) {
  if (name == "gowers" || name == "coset" || name == "max_coset") return "SL(2,5)";
  if (name == "schreier") return "GL(2,5)";
  return "SL(2,7)";
}

Clause flag(std::string name, bool value) {
  return make_clause(std::move(name), value ? 1 : 0, "==", 1);
}

GenSet with_identity(const GenSet& s) { return set_union(s, GenSet::identity_set(s.spec())); }

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t cases, std::uint64_t seed, const std::string& group) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(Errc::ConfigError, "unknown lemma suite '" + name + "'");
  }
  SuiteResult res;
  res.name = name;
  const GroupSpec spec = GroupSpec::parse(group.empty() ? default_group(name) : group);
  res.group = spec.literal();
  const std::uint64_t order = spec.order_u64();

  // Shared per-suite context, built once.
  std::vector<Torus> tori;
  std::optional<GenSet> everything;
  if (name == "coset" || name == "subgroup_growth" || name == "max_coset" || name == "freiman") {
    tori = maximal_tori(spec);
  }
  if (name == "freiman" || name == "schreier") everything = enumerate_group(spec);

  for (std::uint64_t i = 0; i < cases; ++i) {
    Rng rng(derive_seed(seed, i));
    Verdict v;
    if (name == "olson") {
      const auto size = 2 + rng.below(std::max<std::uint64_t>(1, order / 8));
      const GenSet alpha = random_generating_set(spec, size, rng.next());
      const GenSet beta = random_subset(spec, 1 + rng.below(order / 2), rng);
      v = check_olson(alpha, beta);
    } else if (name == "ruzsa") {
      const GenSet alpha = random_symmetric_set(spec, 1 + rng.below(30), rng);
      v = check_ruzsa(alpha, 4 + static_cast<int>(i % 3));
    } else if (name == "gowers") {
      const std::uint64_t k = min_rep_degree(spec);
      // Smallest size s with k s^3 > |G|^3, then a random size up to |G|.
      std::uint64_t s = 1;
      while (BigInt(k) * s * s * s <= BigInt(order) * order * order) ++s;
      const GenSet alpha = random_symmetric_set(spec, s + rng.below(order - s + 1), rng);
      v = check_gowers(alpha, alpha, alpha, k);
    } else if (name == "coset") {
      const GenSet alpha = random_symmetric_set(spec, 1 + rng.below(20), rng);
      const Torus& t = tori[rng.below(tori.size())];
      const Matrix h = alpha[rng.below(alpha.size())];
      v = check_coset_concentration(alpha, t.elements, h, t.dim);
    } else if (name == "quotient") {
      const GenSet center(spec, {spec.identity(), spec.from_ints({-1, 0, 0, -1})});
      const GenSet alpha = random_symmetric_set(spec, 1 + rng.below(30), rng);
      v = check_quotient_growth(alpha, center, standard_generators(spec, "transvections"));
    } else if (name == "schreier") {
      std::vector<Matrix> sl;
      for (const auto& m : *everything) {
        if (spec.det(m) == spec.field().one()) sl.push_back(m);
      }
      const GenSet h = GenSet::from_canonical(spec, std::move(sl));
      const GenSet alpha = random_generating_set(spec, 2 + rng.below(6), rng.next());
      v = check_schreier(alpha, h);
    } else if (name == "subgroup_growth") {
      const GenSet alpha = with_identity(random_subset(spec, 1 + rng.below(30), rng));
      const Torus& t = tori[rng.below(tori.size())];
      v = check_subgroup_growth(alpha, t.elements, 1 + static_cast<int>(i % 3));
    } else if (name == "max_coset") {
      const GenSet alpha = random_generating_set(spec, 2 + rng.below(10), rng.next());
      const Torus& t = tori[rng.below(tori.size())];
      int k = 1;
      GenSet pw = alpha;
      while (!t.elements.is_subset_of(pw)) {
        pw = product_set(pw, alpha);
        ++k;
      }
      v = check_max_coset(alpha, t.elements, k);
    } else {  // freiman: plant alpha = T h with h normalizing T
      const Torus& t = tori[rng.below(tori.size())];
      const GenSet norm = normalizer(t.elements, *everything);
      const Matrix h = norm[rng.below(norm.size())];
      const GenSet alpha = translate(t.elements, h, false);
      const auto found = freiman_detect(alpha);
      v.check = "freiman";
      v.add(flag("detector fires on a planted coset", found.has_value()));
      if (found) {
        v.add(flag("S equals the planted torus", found->s == t.elements));
        v.add(flag("alpha = S x", translate(found->s, found->x, false) == alpha));
        v.witness = found->x;
      }
    }
    if (!v.hypothesis_met) ++res.skipped;
    if (!v.holds) ++res.violations;
    ++res.cases;
    res.verdicts.push_back(std::move(v));
  }
  return res;
}

}  // namespace growthlab
