#include "growthlab/pargcd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "growthlab/error.hpp"

namespace growthlab::pargcd {

namespace {

constexpr Monomial kExpMask = 0xffff;

int shift_of(int i) { return 16 * (kMaxParams - 1 - i); }

Monomial monomial_mul(Monomial a, Monomial b) {
  for (int i = 0; i < kMaxParams; ++i) {
    const auto s = ((a >> shift_of(i)) & kExpMask) + ((b >> shift_of(i)) & kExpMask);
    if (s > kExpMask) throw Error(Errc::DegreeCapExceeded, "parameter exponent overflow");
  }
  return a + b;
}

}  // namespace

Ring::Ring(Field field, int k) : field_(std::move(field)), k_(k) {
  if (k < 0 || k > kMaxParams) {
    throw Error(Errc::DegreeCapExceeded, "at most " + std::to_string(kMaxParams) + " parameters");
  }
}

MPoly Ring::constant(Fq c) const {
  MPoly p;
  if (c != field_.zero()) p.terms.push_back({0, c});
  return p;
}

MPoly Ring::variable(int i) const {
  if (i < 0 || i >= k_) throw Error(Errc::InvalidArgument, "parameter index out of range");
  return MPoly{{{Monomial{1} << shift_of(i), field_.one()}}};
}

MPoly Ring::add(const MPoly& a, const MPoly& b) const {
  MPoly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  auto i = a.terms.begin();
  auto j = b.terms.begin();
  while (i != a.terms.end() || j != b.terms.end()) {
    if (j == b.terms.end() || (i != a.terms.end() && i->first < j->first)) {
      out.terms.push_back(*i++);
    } else if (i == a.terms.end() || j->first < i->first) {
      out.terms.push_back(*j++);
    } else {
      const Fq c = field_.add(i->second, j->second);
      if (c != field_.zero()) out.terms.push_back({i->first, c});
      ++i;
      ++j;
    }
  }
  return out;
}

MPoly Ring::neg(const MPoly& a) const {
  MPoly out = a;
  for (auto& [m, c] : out.terms) c = field_.neg(c);
  return out;
}

MPoly Ring::sub(const MPoly& a, const MPoly& b) const { return add(a, neg(b)); }

MPoly Ring::scale(const MPoly& a, Fq c) const {
  if (c == field_.zero()) return {};
  MPoly out = a;
  for (auto& [m, v] : out.terms) v = field_.mul(v, c);
  return out;
}

MPoly Ring::mul(const MPoly& a, const MPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::pair<Monomial, Fq>> raw;
  raw.reserve(a.terms.size() * b.terms.size());
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) raw.push_back({monomial_mul(ma, mb), field_.mul(ca, cb)});
  }
  std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  MPoly out;
  for (const auto& [m, c] : raw) {
    if (!out.terms.empty() && out.terms.back().first == m) {
      out.terms.back().second = field_.add(out.terms.back().second, c);
      if (out.terms.back().second == field_.zero()) out.terms.pop_back();
    } else {
      out.terms.push_back({m, c});
    }
  }
  return out;
}

MPoly Ring::normalize(const MPoly& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.terms.back().second));
}

Fq Ring::eval(const MPoly& a, std::span<const Fq> z) const {
  Fq acc = field_.zero();
  for (const auto& [m, c] : a.terms) {
    Fq v = c;
    for (int i = 0; i < k_; ++i) {
      const int e = exponent(m, i);
      if (e) v = field_.mul(v, field_.pow(z[i], e));
    }
    acc = field_.add(acc, v);
  }
  return acc;
}

int Ring::total_degree(const MPoly& a) const {
  int d = a.is_zero() ? -1 : 0;
  for (const auto& [m, c] : a.terms) {
    int s = 0;
    for (int i = 0; i < k_; ++i) s += exponent(m, i);
    d = std::max(d, s);
  }
  return d;
}

void trim(TPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

TPoly Ring::tadd(const TPoly& a, const TPoly& b) const {
  TPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size()) {
      out[i] = add(a[i], b[i]);
    } else {
      out[i] = i < a.size() ? a[i] : b[i];
    }
  }
  trim(out);
  return out;
}

TPoly Ring::tsub(const TPoly& a, const TPoly& b) const {
  TPoly nb = b;
  for (auto& c : nb) c = neg(c);
  return tadd(a, nb);
}

TPoly Ring::tmul(const TPoly& a, const TPoly& b) const {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

TPoly Ring::tscale(const TPoly& a, const MPoly& c) const {
  TPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], c);
  trim(out);
  return out;
}

TPoly Ring::tshift(const TPoly& a, int s) const {
  if (a.empty()) return a;
  TPoly out(s, MPoly{});
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

TPoly Ring::derivative(const TPoly& a) const {
  if (a.size() <= 1) return {};
  TPoly out(a.size() - 1);
  for (std::size_t j = 1; j < a.size(); ++j) out[j - 1] = scale(a[j], field_.from_int(static_cast<std::int64_t>(j)));
  trim(out);
  return out;
}

std::vector<Fq> Ring::specialize(const TPoly& a, std::span<const Fq> z) const {
  std::vector<Fq> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = eval(a[j], z);
  while (!out.empty() && out.back() == field_.zero()) out.pop_back();
  return out;
}

namespace {

std::string format_coefficient(const Field& f, Fq c) {
  if (f.is_prime_field()) return f.format(c);
  return "[" + f.format(c) + "]";
}

}  // namespace

std::string Ring::format(const MPoly& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto [m, c] = *it;
    std::string mono;
    for (int i = 0; i < k_; ++i) {
      const int e = exponent(m, i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += format_coefficient(field_, c);
    } else if (c == field_.one()) {
      out += mono;
    } else {
      out += format_coefficient(field_, c) + "*" + mono;
    }
  }
  return out;
}

std::string Ring::format(const TPoly& a) const {
  if (a.empty()) return "0";
  std::string out;
  for (int j = tdegree(a); j >= 0; --j) {
    if (a[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = format(a[j]);
    const bool compound = a[j].terms.size() > 1;
    if (j == 0) {
      out += compound && !out.empty() ? "(" + c + ")" : c;
      continue;
    }
    if (c != "1") out += compound ? "(" + c + ")*" : c + "*";
    out += j == 1 ? "t" : "t^" + std::to_string(j);
  }
  return out;
}

int ParamFamily::d() const {
  int d = 0;
  for (const auto& p : polys) d = std::max(d, tdegree(p));
  return d;
}

int ParamFamily::e() const {
  const Ring ring(field, k);
  int e = 0;
  for (const auto& p : polys) {
    for (const auto& c : p) e = std::max(e, ring.total_degree(c));
  }
  return e;
}

int ParamFamily::total_degree() const {
  const Ring ring(field, k);
  int out = 0;
  for (const auto& p : polys) {
    for (int j = 0; j <= tdegree(p); ++j) {
      if (!p[j].is_zero()) out = std::max(out, j + ring.total_degree(p[j]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class Parser {
 public:
  Parser(const Ring& ring, std::string_view text) : ring_(ring), s_(text) {}

  TPoly parse() {
    TPoly v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > (1ull << 40)) fail("number too large");
    }
    return v;
  }

  TPoly expr() {
    TPoly acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    while (true) {
      TPoly t = term();
      acc = negate ? ring_.tsub(acc, t) : ring_.tadd(acc, t);
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return acc;
      }
    }
  }

  TPoly term() {
    TPoly acc = factor();
    while (accept('*')) acc = ring_.tmul(acc, factor());
    return acc;
  }

  TPoly factor() {
    TPoly base = atom();
    if (accept('^')) {
      const auto e = integer();
      if (e > 64) fail("exponent too large");
      TPoly r{ring_.constant(ring_.field().one())};
      for (std::uint64_t i = 0; i < e; ++i) r = ring_.tmul(r, base);
      return r;
    }
    return base;
  }

  TPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    const Field& f = ring_.field();
    if (c == '(') {
      ++pos_;
      TPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      TPoly v = factor();
      return ring_.tsub({}, v);
    }
    if (c == '[') {
      ++pos_;
      std::vector<std::uint32_t> coeffs;
      do {
        coeffs.push_back(static_cast<std::uint32_t>(integer() % f.p()));
      } while (accept(','));
      if (!accept(']')) fail("expected ']'");
      if (static_cast<int>(coeffs.size()) != f.k()) fail("field literal needs " + std::to_string(f.k()) + " coefficients");
      return lift(ring_.constant(f.from_coeffs(coeffs)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = integer();
      return lift(ring_.constant(f.from_int(static_cast<std::int64_t>(v % f.p()))));
    }
    if (c == 't') {
      ++pos_;
      return TPoly{MPoly{}, ring_.constant(f.one())};
    }
    if (c == 'z') {
      ++pos_;
      const auto i = integer();
      if (i < 1 || i > static_cast<std::uint64_t>(ring_.k())) {
        fail("parameter z" + std::to_string(i) + " out of range (k = " + std::to_string(ring_.k()) + ")");
      }
      return lift(ring_.variable(static_cast<int>(i) - 1));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static TPoly lift(MPoly c) {
    TPoly v{std::move(c)};
    trim(v);
    return v;
  }

  const Ring& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ParamFamily parse_family(std::string_view text, std::optional<Field> field, std::optional<int> k) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto body = strip(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq != std::string_view::npos) {
      const auto key = strip(body.substr(0, eq));
      const auto value = strip(body.substr(eq + 1));
      if (key == "field") {
        field = Field::parse(value);
        continue;
      }
      if (key == "params") {
        k = std::stoi(std::string(value));
        continue;
      }
      throw Error(Errc::ParseError, "unknown directive '" + std::string(key) + "'");
    }
    lines.emplace_back(body);
  }
  if (!field) throw Error(Errc::ParseError, "family has no field (add 'field = GF(p)')");
  ParamFamily fam{*field, k.value_or(1), {}};
  const Ring ring(fam.field, fam.k);
  for (const auto& l : lines) {
    TPoly p = Parser(ring, l).parse();
    if (tdegree(p) > kMaxTDegree) {
      throw Error(Errc::DegreeCapExceeded, "t-degree above " + std::to_string(kMaxTDegree));
    }
    fam.polys.push_back(std::move(p));
  }
  return fam;
}

std::string format_family(const ParamFamily& fam) {
  const Ring ring(fam.field, fam.k);
  std::string out = "field = " + fam.field.literal() + "\nparams = " + std::to_string(fam.k) + "\n";
  for (const auto& p : fam.polys) out += ring.format(p) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Partition engine

namespace {

using Region = std::vector<Condition>;
enum class Status { Zero, Nonzero, Unknown };

struct Branch {
  Region region;
  TPoly poly;
};

bool divides(Monomial a, Monomial b) {
  for (int i = 0; i < kMaxParams; ++i) {
    if (((a >> shift_of(i)) & kExpMask) > ((b >> shift_of(i)) & kExpMask)) return false;
  }
  return true;
}

// Multivariate division in lex order. Returns the remainder of c by the
// divisors; when quotient is given (single divisor) it receives the quotient.
MPoly divide(const Ring& ring, MPoly c, const std::vector<const MPoly*>& divisors, MPoly* quotient = nullptr) {
  const Field& f = ring.field();
  std::vector<std::pair<Monomial, Fq>> rest;  // collected in decreasing order
  while (!c.is_zero()) {
    const auto [m, coef] = c.terms.back();
    bool reduced = false;
    for (const MPoly* g : divisors) {
      const auto [gm, gc] = g->terms.back();
      if (!divides(gm, m)) continue;
      const MPoly factor{{{m - gm, f.div(coef, gc)}}};
      c = ring.sub(c, ring.mul(factor, *g));
      if (quotient) *quotient = ring.add(*quotient, factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.push_back({m, coef});
      c.terms.pop_back();
    }
  }
  return MPoly{{rest.rbegin(), rest.rend()}};
}

std::optional<MPoly> exact_quotient(const Ring& ring, const MPoly& a, const MPoly& b) {
  MPoly q;
  if (!divide(ring, a, {&b}, &q).is_zero()) return std::nullopt;
  return q;
}

class Engine {
 public:
  explicit Engine(const Ring& ring) : r_(ring) {}

  struct Classified {
    Status status;
    MPoly condition;  // normalized, for Unknown
  };

  // Coefficients are only ever replaced by values that agree with them on
  // every closure point of the region, so all simplifications are sound.
  MPoly reduce(const Region& region, const MPoly& c) const {
    std::vector<const MPoly*> zeros;
    for (const auto& cond : region) {
      if (cond.vanishes) zeros.push_back(&cond.poly);
    }
    return zeros.empty() ? c : divide(r_, c, zeros);
  }

  // Removes factors known not to vanish on the region.
  MPoly strip_units(const Region& region, MPoly c) const {
    for (const auto& cond : region) {
      if (cond.vanishes) continue;
      while (!r_.is_constant(c)) {
        auto q = exact_quotient(r_, c, cond.poly);
        if (!q) break;
        c = std::move(*q);
      }
    }
    return c;
  }

  Classified classify(const Region& region, const MPoly& c) const {
    const MPoly v = reduce(region, c);
    if (v.is_zero()) return {Status::Zero, {}};
    const MPoly u = strip_units(region, v);
    if (r_.is_constant(u)) return {Status::Nonzero, {}};
    MPoly n = r_.normalize(u);
    for (const auto& cond : region) {
      if (cond.poly == n) return {cond.vanishes ? Status::Zero : Status::Nonzero, {}};
    }
    return {Status::Unknown, std::move(n)};
  }

  TPoly simplify(const Region& region, TPoly p) const {
    for (auto& c : p) c = reduce(region, c);
    trim(p);
    if (p.empty()) return p;
    for (const auto& cond : region) {
      if (cond.vanishes) continue;
      while (true) {
        TPoly divided = p;
        bool exact = true;
        for (auto& c : divided) {
          if (c.is_zero()) continue;
          auto q = exact_quotient(r_, c, cond.poly);
          if (!q || r_.is_constant(c)) {
            exact = false;
            break;
          }
          c = std::move(*q);
        }
        if (!exact) break;
        p = std::move(divided);
      }
    }
    return p;
  }

  // Splits the region so that on each piece the t-degree of p is fixed; the
  // returned polynomial is truncated to that degree (its leading coefficient
  // does not vanish on the piece) or is zero.
  std::vector<Branch> branch_degree(const Region& region, const TPoly& p) const {
    std::vector<Branch> out;
    Region cur = region;
    for (int j = tdegree(p); j >= 0; --j) {
      auto cl = classify(cur, p[j]);
      if (cl.status == Status::Zero) continue;
      TPoly truncated(p.begin(), p.begin() + j + 1);
      if (cl.status == Status::Nonzero) {
        out.push_back({cur, simplify(cur, std::move(truncated))});
        return out;
      }
      Region nonvanish = cur;
      nonvanish.push_back({cl.condition, false});
      TPoly kept = simplify(nonvanish, std::move(truncated));
      out.push_back({std::move(nonvanish), std::move(kept)});
      cur.push_back({std::move(cl.condition), true});
    }
    out.push_back({cur, TPoly{}});
    return out;
  }

  // Simplifies a polynomial whose degree is known on the region; nullopt when
  // the leading coefficient collapses, which means the region has no points.
  std::optional<TPoly> keep_degree(const Region& region, TPoly p) const {
    const int d = tdegree(p);
    p = simplify(region, std::move(p));
    if (tdegree(p) != d) return std::nullopt;
    return p;
  }

  // Pseudo-remainder lc(b)^(deg a - deg b + 1) a mod b; requires deg a >= deg b >= 0.
  TPoly prem(const TPoly& a, const TPoly& b) const {
    const int db = tdegree(b);
    const MPoly& lc = b.back();
    TPoly rem = a;
    for (int j = tdegree(a); j >= db; --j) {
      if (j >= static_cast<int>(rem.size())) {
        rem = r_.tscale(rem, lc);
        continue;
      }
      const MPoly c = rem[j];
      rem = r_.tscale(rem, lc);
      if (!c.is_zero()) rem = r_.tsub(rem, r_.tshift(r_.tscale(b, c), j - db));
      if (static_cast<int>(rem.size()) > j) rem.resize(j);  // position j is now zero
      trim(rem);
    }
    return rem;
  }

  // Pseudo-quotient of lc(b)^(deg a - deg b + 1) a by b; exact degree deg a - deg b
  // when both leading coefficients are nonvanishing on the region.
  TPoly pquot(const TPoly& a, const TPoly& b) const {
    const int da = tdegree(a);
    const int db = tdegree(b);
    const MPoly& lc = b.back();
    TPoly rem = a;
    TPoly quot(da - db + 1);
    for (int j = da; j >= db; --j) {
      quot = r_.tscale(quot, lc);
      quot.resize(da - db + 1);
      MPoly c = j < static_cast<int>(rem.size()) ? rem[j] : MPoly{};
      rem = r_.tscale(rem, lc);
      if (!c.is_zero()) {
        quot[j - db] = r_.add(quot[j - db], c);
        rem = r_.tsub(rem, r_.tshift(r_.tscale(b, c), j - db));
      }
      if (static_cast<int>(rem.size()) > j) rem.resize(j);
      trim(rem);
    }
    return quot;
  }

  // gcd of two polynomials whose t-degrees are fixed on the region.
  void gcd_fixed(const Region& region, TPoly a, TPoly b, std::vector<Branch>& out) const {
    if (b.empty()) {
      out.push_back({region, std::move(a)});
      return;
    }
    if (a.empty()) {
      out.push_back({region, std::move(b)});
      return;
    }
    if (tdegree(a) < tdegree(b)) std::swap(a, b);
    if (tdegree(b) == 0) {
      out.push_back({region, std::move(b)});
      return;
    }
    const TPoly rem = prem(a, b);
    for (auto& br : branch_degree(region, rem)) gcd_fixed(br.region, b, std::move(br.poly), out);
  }

  std::vector<Branch> uniform_gcd(const Region& region, const TPoly& a, const TPoly& b) const {
    std::vector<Branch> out;
    for (auto& bb : branch_degree(region, b)) {
      for (auto& ab : branch_degree(bb.region, a)) gcd_fixed(ab.region, ab.poly, bb.poly, out);
    }
    return out;
  }

  struct Counted {
    Region region;
    int roots;
  };

  // Distinct closure roots of p, whose leading coefficient does not vanish.
  void count_roots(const Region& region, const TPoly& p, int base, std::vector<Counted>& out) const {
    if (tdegree(p) <= 0) {
      out.push_back({region, base});
      return;
    }
    const std::uint32_t ch = r_.field().p();
    for (auto& db : branch_degree(region, r_.derivative(p))) {
      if (db.poly.empty()) {
        // p = Q(t^p) on this piece; x -> x^p is injective on the closure.
        TPoly q;
        for (std::size_t j = 0; j < p.size(); j += ch) q.push_back(p[j]);
        trim(q);
        count_roots(db.region, q, base, out);
        continue;
      }
      std::vector<Branch> gcds;
      gcd_fixed(db.region, p, db.poly, gcds);
      for (auto& g : gcds) {
        auto w = keep_degree(g.region, pquot(p, g.poly));
        if (w) yun(g.region, *w, g.poly, base + tdegree(*w), out);
      }
    }
  }

  // W collects factors of multiplicity prime to p; peel them off C until only
  // the p-th power part of C remains.
  void yun(const Region& region, const TPoly& w, const TPoly& c, int base, std::vector<Counted>& out) const {
    if (tdegree(w) == 0) {
      count_roots(region, c, base, out);
      return;
    }
    std::vector<Branch> gcds;
    gcd_fixed(region, w, c, gcds);
    for (auto& y : gcds) {
      auto rest = keep_degree(y.region, pquot(c, y.poly));
      if (rest) yun(y.region, y.poly, *rest, base, out);
    }
  }

  TPoly normalize_unit(const TPoly& p) const {
    if (p.empty()) return p;
    const Fq lead = p.back().terms.back().second;
    TPoly out = p;
    for (auto& c : out) c = r_.scale(c, r_.field().inv(lead));
    return out;
  }

 private:
  const Ring& r_;
};

void check_caps(const ParamFamily& fam) {
  if (fam.k > kMaxParams) throw Error(Errc::DegreeCapExceeded, "too many parameters");
  if (fam.d() > kMaxTDegree) {
    throw Error(Errc::DegreeCapExceeded, "t-degree above " + std::to_string(kMaxTDegree));
  }
}

}  // namespace

std::vector<PartitionClass> parametric_partition(const ParamFamily& fam) {
  check_caps(fam);
  const Ring ring(fam.field, fam.k);
  const Engine eng(ring);
  std::vector<Branch> classes{{Region{}, TPoly{}}};
  for (const auto& f : fam.polys) {
    std::vector<Branch> next;
    for (const auto& c : classes) {
      auto parts = eng.uniform_gcd(c.region, c.poly, f);
      for (auto& p : parts) next.push_back(std::move(p));
    }
    classes = std::move(next);
  }
  std::vector<PartitionClass> out;
  out.reserve(classes.size());
  for (auto& c : classes) {
    PartitionClass pc;
    pc.conditions = std::move(c.region);
    pc.gcd = eng.normalize_unit(c.poly);
    pc.label = pc.gcd.empty() ? kInfinite : tdegree(pc.gcd);
    out.push_back(std::move(pc));
  }
  return out;
}

std::vector<PartitionClass> root_count_refinement(const ParamFamily& fam,
                                                  const std::vector<PartitionClass>& classes) {
  const Ring ring(fam.field, fam.k);
  const Engine eng(ring);
  std::vector<PartitionClass> out;
  for (const auto& c : classes) {
    if (c.gcd.empty()) {
      PartitionClass pc = c;
      pc.label = kInfinite;
      out.push_back(std::move(pc));
      continue;
    }
    std::vector<Engine::Counted> counted;
    eng.count_roots(c.conditions, c.gcd, 0, counted);
    for (auto& k : counted) out.push_back(PartitionClass{std::move(k.region), c.gcd, k.roots});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

std::vector<Fq> monic_of(const Field& f, std::vector<Fq> p) {
  if (p.empty()) return p;
  const Fq inv = f.inv(p.back());
  for (auto& c : p) c = f.mul(c, inv);
  return p;
}

}  // namespace

VerifyReport verify_partition(const ParamFamily& fam, const std::vector<PartitionClass>& refined,
                              bool throw_on_mismatch) {
  const Ring ring(fam.field, fam.k);
  const Field& f = fam.field;
  VerifyReport rep;
  std::uint64_t points = 1;
  for (int i = 0; i < fam.k; ++i) {
    points *= f.q();
    if (points > 100'000) throw Error(Errc::SizeLimitExceeded, "more than 10^5 parameter points");
  }
  rep.points = points;
  rep.classes = refined.size();
  const int d = fam.total_degree();
  rep.class_bound = boost::multiprecision::pow(BigInt(d + 2),
                                               boost::multiprecision::pow(BigInt(d + 1), fam.k + 2).convert_to<unsigned>());
  rep.within_bound = BigInt(refined.size()) <= rep.class_bound;

  // Each distinct condition polynomial is evaluated once over all points.
  std::map<MPoly, std::vector<bool>> zero_at;
  std::vector<std::vector<Fq>> all_points;
  all_points.reserve(points);
  {
    std::vector<Fq> z(fam.k, f.zero());
    for (std::uint64_t i = 0; i < points; ++i) {
      all_points.push_back(z);
      for (int j = fam.k - 1; j >= 0; --j) {
        if (++z[j].code < f.q()) break;
        z[j].code = 0;
      }
    }
  }
  for (const auto& c : refined) {
    for (const auto& cond : c.conditions) {
      if (zero_at.count(cond.poly)) continue;
      std::vector<bool> v(points);
      for (std::uint64_t i = 0; i < points; ++i) v[i] = ring.eval(cond.poly, all_points[i]) == f.zero();
      zero_at.emplace(cond.poly, std::move(v));
    }
  }

  std::vector<std::uint64_t> members(refined.size(), 0);
  auto note = [&](const std::string& what, const std::vector<Fq>& z) {
    if (!rep.first_mismatch.empty()) return;
    std::string at;
    for (auto v : z) at += (at.empty() ? "" : ",") + f.format(v);
    rep.first_mismatch = what + " at z=(" + at + ")";
  };
  for (std::uint64_t i = 0; i < points; ++i) {
    const auto& z = all_points[i];
    std::size_t hits = 0, which = 0;
    for (std::size_t c = 0; c < refined.size(); ++c) {
      bool sat = true;
      for (const auto& cond : refined[c].conditions) {
        if (zero_at.at(cond.poly)[i] != cond.vanishes) {
          sat = false;
          break;
        }
      }
      if (sat) {
        ++hits;
        which = c;
      }
    }
    if (hits == 0) {
      ++rep.uncovered;
      note("no class", z);
      continue;
    }
    if (hits > 1) {
      ++rep.overlaps;
      note(std::to_string(hits) + " classes", z);
      continue;
    }
    ++members[which];
    const auto oracle = brute_force_oracle(fam, z);
    const auto mine = monic_of(f, ring.specialize(refined[which].gcd, z));
    if (mine != oracle.gcd) {
      ++rep.gcd_mismatches;
      note("gcd differs from the oracle", z);
    }
    if (refined[which].label != oracle.root_count) {
      ++rep.label_mismatches;
      note("label " + std::to_string(refined[which].label) + " vs oracle " + std::to_string(oracle.root_count), z);
    }
  }
  rep.empty_classes = static_cast<std::uint64_t>(std::count(members.begin(), members.end(), 0));
  if (throw_on_mismatch && !rep.ok()) throw Error(Errc::MismatchFound, rep.first_mismatch);
  return rep;
}

VerifyReport verify_partition(const ParamFamily& fam, bool throw_on_mismatch) {
  return verify_partition(fam, root_count_refinement(fam, parametric_partition(fam)), throw_on_mismatch);
}

ParamFamily random_family(const Field& field, int k, int max_t_degree, Rng& rng) {
  const Ring ring(field, k);
  auto nonzero = [&] { return Fq{static_cast<std::uint32_t>(1 + rng.below(field.q() - 1))}; };
  auto coefficient = [&]() -> MPoly {
    const auto kind = rng.below(10);
    if (kind < 3) return {};
    if (kind < 6 || k == 0) return ring.constant(nonzero());
    MPoly c;
    const int terms = 1 + static_cast<int>(rng.below(2));
    for (int t = 0; t < terms; ++t) {
      MPoly mono = ring.constant(nonzero());
      const int deg = static_cast<int>(rng.below(3));
      for (int e = 0; e < deg; ++e) mono = ring.mul(mono, ring.variable(static_cast<int>(rng.below(k))));
      c = ring.add(c, mono);
    }
    return c;
  };
  ParamFamily fam{field, k, {}};
  for (int i = 0; i < 2; ++i) {
    const int deg = static_cast<int>(rng.below(max_t_degree + 1));
    TPoly p(deg + 1);
    for (int j = 0; j <= deg; ++j) p[j] = coefficient();
    while (p[deg].is_zero()) p[deg] = coefficient();
    trim(p);
    fam.polys.push_back(std::move(p));
  }
  return fam;
}

}  // namespace growthlab::pargcd
