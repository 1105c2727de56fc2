#include "growthlab/upoly.hpp"

#include <algorithm>

#include "growthlab/error.hpp"

namespace growthlab::upoly {

void trim(UPoly& f) {
  while (!f.empty() && f.back().code == 0) f.pop_back();
}

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly add(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly sub(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

UPoly mul(const Field& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

UPoly scale(const Field& F, const UPoly& a, Fq c) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const Field& F, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  UPoly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {UPoly{}, rem};
  UPoly quo(rem.size() - b.size() + 1, F.zero());
  const Fq lead_inv = F.inv(b.back());
  while (rem.size() >= b.size()) {
    const Fq c = F.mul(rem.back(), lead_inv);
    const std::size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b[i]));
    }
    trim(rem);
  }
  trim(quo);
  return {quo, rem};
}

UPoly monic(const Field& F, const UPoly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

UPoly gcd(const Field& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = divmod(F, a, b).second;
    std::swap(a, b);
  }
  return monic(F, a);
}

UPoly derivative(const Field& F, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a[i]);
  }
  trim(r);
  return r;
}

Fq eval(const Field& F, const UPoly& a, Fq x) {
  Fq acc = F.zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

}  // namespace growthlab::upoly
