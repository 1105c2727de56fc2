#include <numeric>

#include "growthlab/pargcd.hpp"

// Pointwise reference answers. Deliberately shares nothing with the partition
// engine beyond field arithmetic.
namespace growthlab::pargcd {

namespace {

using Poly = std::vector<Fq>;

void strip(Poly& a) {
  while (!a.empty() && a.back() == Fq{0}) a.pop_back();
}

Fq evaluate_coefficient(const Field& f, int k, const MPoly& c, std::span<const Fq> z) {
  Fq acc = f.zero();
  for (const auto& [m, coef] : c.terms) {
    Fq term = coef;
    for (int i = 0; i < k; ++i) {
      auto e = (m >> (16 * (kMaxParams - 1 - i))) & 0xffff;
      for (; e > 0; --e) term = f.mul(term, z[i]);
    }
    acc = f.add(acc, term);
  }
  return acc;
}

// a mod b for b != 0.
Poly remainder(const Field& f, Poly a, const Poly& b) {
  const Fq inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Fq factor = f.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    a.pop_back();
    strip(a);
  }
  return a;
}

Poly euclid(const Field& f, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = remainder(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Fq inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  strip(out);
  return remainder(f, std::move(out), m);
}

Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly acc{f.one()};
  acc = remainder(f, acc, m);
  while (e) {
    if (e & 1) acc = mulmod(f, acc, base, m);
    base = mulmod(f, base, base, m);
    e >>= 1;
  }
  return acc;
}

}  // namespace

OracleResult brute_force_oracle(const ParamFamily& fam, std::span<const Fq> z) {
  const Field& f = fam.field;
  Poly g;
  for (const auto& p : fam.polys) {
    Poly s(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) s[j] = evaluate_coefficient(f, fam.k, p[j], z);
    strip(s);
    g = euclid(f, std::move(g), std::move(s));
  }
  OracleResult out;
  out.gcd = g;
  out.gcd_degree = static_cast<int>(g.size()) - 1;
  if (g.empty()) return out;  // every specialization is zero
  const int m = out.gcd_degree;
  if (m == 0) {
    out.root_count = 0;
    return out;
  }
  // Every root of g lies in F_{q^j} for some j <= m, hence in F_{q^L}.
  std::uint64_t lcm = 1;
  for (std::uint64_t j = 2; j <= static_cast<std::uint64_t>(m); ++j) lcm = std::lcm(lcm, j);
  const Poly x = remainder(f, Poly{f.zero(), f.one()}, g);
  Poly h = x;
  for (std::uint64_t i = 0; i < lcm; ++i) h = powmod(f, h, f.q(), g);
  Poly diff = h;
  diff.resize(std::max<std::size_t>(diff.size(), 2), f.zero());
  diff[1] = f.sub(diff[1], f.one());
  strip(diff);
  out.root_count = static_cast<int>(euclid(f, g, diff).size()) - 1;
  return out;
}

}  // namespace growthlab::pargcd
