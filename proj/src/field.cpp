#include "growthlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <utility>

#include "growthlab/error.hpp"

namespace growthlab {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 20;
constexpr std::uint32_t kLogTableLimit = 1u << 16;

// Dense polynomials over Z/p, constant first, used only while validating a
// modulus (the field does not exist yet at that point).
using ZpPoly = std::vector<std::uint32_t>;

void trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

ZpPoly poly_mod(ZpPoly a, const ZpPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

ZpPoly poly_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

ZpPoly poly_gcd(ZpPoly a, ZpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Ben-Or: f of degree k is irreducible iff gcd(t^(p^i) - t, f) = 1 for i <= k/2.
bool is_irreducible(const ZpPoly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  if (k <= 1) return k == 1;
  ZpPoly h = poly_mod({0, 1}, f, p);
  for (std::size_t i = 1; i <= k / 2; ++i) {
    ZpPoly acc = {1};
    ZpPoly base = h;
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    h = acc;
    ZpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(diff, f, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t parse_u32(std::string_view s, std::string_view context) {
  std::uint32_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw Error(Errc::ParseError, "bad integer '" + std::string(s) + "' in " + std::string(context));
  }
  return v;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct Field::Impl {
  std::uint32_t p = 2;
  int k = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;  // constant first, monic, empty if k == 1
  std::vector<std::uint32_t> place;    // place[i] = p^(k-1-i)
  std::uint32_t one = 1;
  // Discrete log tables (k > 1, q <= 2^16), keyed to the primitive element.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  std::uint32_t primitive = 0;

  std::uint32_t digit(std::uint32_t code, int i) const { return code / place[i] % p; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) {
      const std::uint32_t s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    std::uint32_t r = 0;
    for (int i = 0; i < k; ++i) {
      r += (digit(a, i) + digit(b, i)) % p * place[i];
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (k == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    std::uint32_t r = 0;
    for (int i = 0; i < k; ++i) {
      r += (p - digit(a, i)) % p * place[i];
    }
    return r;
  }

  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    ZpPoly pa(k), pb(k);
    for (int i = 0; i < k; ++i) {
      pa[i] = digit(a, i);
      pb[i] = digit(b, i);
    }
    trim(pa);
    trim(pb);
    ZpPoly r = poly_mulmod(pa, pb, modulus, p);
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < r.size(); ++i) code += r[i] * place[i];
    return code;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    if (a == 0 || b == 0) return 0;
    if (!exp_table.empty()) {
      std::uint32_t e = log_table[a] + log_table[b];
      if (e >= q - 1) e -= q - 1;
      return exp_table[e];
    }
    return mul_poly(a, b);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = one;
    std::uint32_t base = a;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
};

Field Field::make(std::uint32_t p, int k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::WrongDegree, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw Error(Errc::UnsupportedSpec, "field size above 2^20");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<std::uint32_t>(q);
  impl->place.assign(k, 1);
  for (int i = k - 2; i >= 0; --i) impl->place[i] = impl->place[i + 1] * p;
  impl->one = impl->place[0];

  if (modulus) {
    ZpPoly m = *modulus;
    if (static_cast<int>(m.size()) != k + 1 || m.back() == 0) {
      throw Error(Errc::WrongDegree, "modulus must have degree " + std::to_string(k));
    }
    for (auto c : m) {
      if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient not reduced mod p");
    }
    if (m.back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
    if (!is_irreducible(m, p)) throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(p)");
    if (k > 1) impl->modulus = std::move(m);
  } else if (k > 1) {
    // Scan monic candidates in lexicographic order of (c_{k-1}, ..., c_0).
    ZpPoly cand(k + 1, 0);
    cand[k] = 1;
    const std::uint64_t count = q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (int i = 0; i < k; ++i) {
        cand[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (is_irreducible(cand, p)) {
        impl->modulus = cand;
        break;
      }
    }
  }

  // Primitive element: least nonzero code of order q - 1.
  const auto factors = prime_factors(q - 1);
  for (std::uint32_t g = 1; g < q; ++g) {
    bool ok = true;
    for (auto r : factors) {
      if (impl->pow(g, (q - 1) / r) == impl->one) {
        ok = false;
        break;
      }
    }
    if (ok) {
      impl->primitive = g;
      break;
    }
  }
  if (q == 2) impl->primitive = impl->one;

  if (k > 1 && q <= kLogTableLimit) {
    impl->exp_table.assign(q - 1, 0);
    impl->log_table.assign(q, 0);
    std::uint32_t x = impl->one;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      impl->exp_table[i] = x;
      impl->log_table[x] = i;
      x = impl->mul_poly(x, impl->primitive);
    }
  }
  return Field(std::move(impl));
}

Field Field::parse(std::string_view literal) {
  std::string_view s = strip(literal);
  if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')') {
    throw Error(Errc::ParseError, "expected GF(...), got '" + std::string(literal) + "'");
  }
  s = s.substr(3, s.size() - 4);
  std::optional<std::vector<std::uint32_t>> modulus;
  if (auto colon = s.find(':'); colon != std::string_view::npos) {
    std::string_view opt = strip(s.substr(colon + 1));
    s = strip(s.substr(0, colon));
    constexpr std::string_view kKey = "modulus=";
    if (opt.substr(0, kKey.size()) != kKey) {
      throw Error(Errc::ParseError, "unknown field option '" + std::string(opt) + "'");
    }
    opt.remove_prefix(kKey.size());
    std::vector<std::uint32_t> coeffs;
    while (!opt.empty()) {
      auto comma = opt.find(',');
      coeffs.push_back(parse_u32(strip(opt.substr(0, comma)), "modulus"));
      if (comma == std::string_view::npos) break;
      opt.remove_prefix(comma + 1);
    }
    modulus = std::move(coeffs);
  }
  std::uint32_t p = 0;
  int k = 1;
  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    p = parse_u32(strip(s.substr(0, caret)), "field literal");
    k = static_cast<int>(parse_u32(strip(s.substr(caret + 1)), "field literal"));
  } else {
    const std::uint32_t q = parse_u32(s, "field literal");
    if (q < 2) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    // Accept a bare prime power such as GF(9).
    std::uint32_t base = q;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        base = d;
        break;
      }
    }
    std::uint32_t rest = q;
    int e = 0;
    while (rest % base == 0) {
      rest /= base;
      ++e;
    }
    if (rest != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    p = base;
    k = e;
  }
  return make(p, k, std::move(modulus));
}

std::uint32_t Field::p() const { return impl_->p; }
int Field::k() const { return impl_->k; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }
Fq Field::one() const { return Fq{impl_->one}; }
bool Field::uses_log_tables() const { return !impl_->exp_table.empty(); }

Fq Field::from_int(std::int64_t v) const {
  const std::int64_t p = impl_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Fq{static_cast<std::uint32_t>(r) * impl_->place[0]};
}

Fq Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) != impl_->k) {
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(impl_->k) + " coefficients");
  }
  std::uint32_t code = 0;
  for (int i = 0; i < impl_->k; ++i) {
    if (coeffs[i] >= impl_->p) throw Error(Errc::InvalidArgument, "coefficient not reduced mod p");
    code += coeffs[i] * impl_->place[i];
  }
  return Fq{code};
}

std::vector<std::uint32_t> Field::coeffs(Fq a) const {
  std::vector<std::uint32_t> out(impl_->k);
  for (int i = 0; i < impl_->k; ++i) out[i] = impl_->digit(a.code, i);
  return out;
}

std::uint32_t Field::coeff(Fq a, int i) const { return impl_->digit(a.code, i); }

Fq Field::add(Fq a, Fq b) const { return Fq{impl_->add(a.code, b.code)}; }
Fq Field::neg(Fq a) const { return Fq{impl_->neg(a.code)}; }
Fq Field::sub(Fq a, Fq b) const { return Fq{impl_->add(a.code, impl_->neg(b.code))}; }
Fq Field::mul(Fq a, Fq b) const { return Fq{impl_->mul(a.code, b.code)}; }
Fq Field::mul_polynomial(Fq a, Fq b) const { return Fq{impl_->mul_poly(a.code, b.code)}; }
Fq Field::pow(Fq a, std::uint64_t e) const { return Fq{impl_->pow(a.code, e)}; }

Fq Field::inv(Fq a) const {
  if (a.code == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (impl_->k == 1) return Fq{inv_mod(a.code, impl_->p)};
  if (!impl_->exp_table.empty()) {
    const std::uint32_t l = impl_->log_table[a.code];
    return Fq{impl_->exp_table[l == 0 ? 0 : impl_->q - 1 - l]};
  }
  return Fq{impl_->pow(a.code, impl_->q - 2)};
}

std::vector<Fq> Field::enumerate() const {
  std::vector<Fq> out(impl_->q);
  for (std::uint32_t i = 0; i < impl_->q; ++i) out[i] = Fq{i};
  return out;
}

Fq Field::primitive_element() const { return Fq{impl_->primitive}; }

Fq Field::frobenius_root(Fq a) const { return pow(a, impl_->q / impl_->p); }

std::uint64_t Field::multiplicative_order(Fq a) const {
  if (a.code == 0) throw Error(Errc::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t order = impl_->q - 1;
  for (auto r : prime_factors(order)) {
    while (order % r == 0 && impl_->pow(a.code, order / r) == impl_->one) order /= r;
  }
  return order;
}

std::string Field::literal() const {
  std::string s = "GF(" + std::to_string(impl_->p);
  if (impl_->k > 1) {
    s += "^" + std::to_string(impl_->k) + ":modulus=";
    for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(impl_->modulus[i]);
    }
  }
  return s + ")";
}

std::string Field::format(Fq a) const {
  if (impl_->k == 1) return std::to_string(a.code);
  std::string s;
  for (int i = 0; i < impl_->k; ++i) {
    if (i) s += ",";
    s += std::to_string(impl_->digit(a.code, i));
  }
  return s;
}

Fq Field::parse_element(std::string_view text) const {
  text = strip(text);
  if (impl_->k == 1) {
    const std::uint32_t v = parse_u32(text, "field element");
    if (v >= impl_->p) throw Error(Errc::ParseError, "element not reduced mod p");
    return Fq{v};
  }
  std::vector<std::uint32_t> coeffs;
  while (true) {
    auto comma = text.find(',');
    coeffs.push_back(parse_u32(strip(text.substr(0, comma)), "field element"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (static_cast<int>(coeffs.size()) != impl_->k) {
    throw Error(Errc::ParseError, "expected " + std::to_string(impl_->k) + " coefficients per element");
  }
  for (auto c : coeffs) {
    if (c >= impl_->p) throw Error(Errc::ParseError, "coefficient not reduced mod p");
  }
  return from_coeffs(coeffs);
}

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->k == other.impl_->k &&
         impl_->modulus == other.impl_->modulus;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw Error(Errc::FieldMismatch, field_.literal() + " vs " + o.field_.literal());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.div(value_, o.value_)};
}

}  // namespace growthlab
