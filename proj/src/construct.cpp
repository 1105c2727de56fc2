#include "growthlab/construct.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "growthlab/error.hpp"

namespace growthlab {

namespace {

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::ParseError, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

ExampleSpec ExampleSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::ParseError, "example spec needs 'dense:' or 'moderate:'");
  }
  ExampleSpec ex;
  const auto kind = text.substr(0, colon);
  if (kind == "dense") {
    ex.variant = ExampleVariant::Dense;
  } else if (kind == "moderate") {
    ex.variant = ExampleVariant::Moderate;
  } else {
    throw Error(Errc::ParseError, "unknown example kind '" + std::string(kind) + "'");
  }
  bool have_n = false, have_size = false;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::ParseError, "expected key=value in example spec");
    const auto key = item.substr(0, eq);
    const auto value = parse_uint(item.substr(eq + 1), key);
    if (key == "n") {
      ex.n = static_cast<int>(value);
      have_n = true;
    } else if ((key == "q" && ex.variant == ExampleVariant::Dense) ||
               (key == "p" && ex.variant == ExampleVariant::Moderate)) {
      ex.q_or_p = value;
      have_size = true;
    } else {
      throw Error(Errc::ParseError, "unexpected key '" + std::string(key) + "' in example spec");
    }
  }
  if (!have_n || !have_size) throw Error(Errc::ParseError, "example spec is missing n or q/p");
  return ex;
}

std::string ExampleSpec::literal() const {
  if (variant == ExampleVariant::Dense) {
    return "dense:n=" + std::to_string(n) + ",q=" + std::to_string(q_or_p);
  }
  return "moderate:n=" + std::to_string(n) + ",p=" + std::to_string(q_or_p);
}

Matrix elementary(const GroupSpec& spec, int i, int j, Fq t) {
  Matrix m = spec.identity();
  m(i, j) = i == j ? spec.field().add(m(i, j), t) : t;
  return m;
}

Matrix diagonal(const GroupSpec& spec, const std::vector<Fq>& entries) {
  Matrix m = spec.zero_matrix();
  for (int i = 0; i < spec.n(); ++i) m(i, i) = entries.at(i);
  return m;
}

Matrix cycle_matrix(const GroupSpec& spec) {
  const int n = spec.n();
  Matrix m = spec.zero_matrix();
  for (int i = 0; i < n; ++i) m((i + 1) % n, i) = spec.field().one();
  if (n % 2 == 0) m(0, n - 1) = spec.field().neg(spec.field().one());
  return m;
}

GenSet diagonal_subgroup(const GroupSpec& spec) {
  const Field& f = spec.field();
  const int n = spec.n();
  std::uint64_t count = 1;
  for (int i = 0; i + 1 < n; ++i) {
    count *= f.q() - 1;
    if (count > 10'000'000) throw Error(Errc::SizeLimitExceeded, "diagonal subgroup too large");
  }
  std::vector<Fq> nonzero = f.enumerate();
  nonzero.erase(nonzero.begin());
  std::vector<Matrix> out;
  out.reserve(count);
  std::vector<std::size_t> idx(n - 1, 0);
  std::vector<Fq> d(n);
  for (std::uint64_t c = 0; c < count; ++c) {
    Fq prod = f.one();
    for (int i = 0; i + 1 < n; ++i) {
      d[i] = nonzero[idx[i]];
      prod = f.mul(prod, d[i]);
    }
    d[n - 1] = f.inv(prod);
    if (spec.family() == Family::GL) {
      for (const auto& last : nonzero) {
        d[n - 1] = last;
        out.push_back(diagonal(spec, d));
      }
    } else {
      out.push_back(diagonal(spec, d));
    }
    for (int i = n - 2; i >= 0; --i) {
      if (++idx[i] < nonzero.size()) break;
      idx[i] = 0;
    }
  }
  return GenSet(spec, std::move(out));
}

namespace {

ExampleSet assemble(GroupSpec spec, GenSet diag_part) {
  const Field& f = spec.field();
  const Fq g = f.primitive_element();
  const int n = spec.n();
  std::vector<Fq> dg(n, f.one());
  dg[0] = g;
  dg[1] = f.inv(g);
  Matrix a = elementary(spec, 0, 1, f.one());
  Matrix b = elementary(spec, 1, 0, f.one());
  Matrix c = spec.mul(diagonal(spec, dg), a);
  Matrix s = cycle_matrix(spec);
  const std::vector<Matrix> extra{a, b, c, s};
  for (std::size_t i = 0; i < extra.size(); ++i) {
    if (diag_part.contains(extra[i])) {
      throw Error(Errc::StructureViolated, "generator " + std::to_string(i) + " lies in the diagonal part");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (extra[i] == extra[j]) {
        throw Error(Errc::StructureViolated, "generators " + std::to_string(j) + " and " +
                                                 std::to_string(i) + " coincide");
      }
    }
  }
  GenSet set = set_union(diag_part, GenSet(spec, extra));
  return ExampleSet{spec, std::move(set), std::move(diag_part), a, b, c, s, g};
}

}  // namespace

ExampleSet example_generating_set(const ExampleSpec& ex) {
  if (ex.variant == ExampleVariant::Moderate) return moderate_growth_set(ex.n, ex.q_or_p);
  if (ex.n < 3 || ex.n > 8) throw Error(Errc::UnsupportedSpec, "dense example needs 3 <= n <= 8");
  if (ex.q_or_p < 3) throw Error(Errc::UnsupportedSpec, "dense example needs q >= 3");
  GroupSpec spec = GroupSpec::parse("SL(" + std::to_string(ex.n) + "," + std::to_string(ex.q_or_p) + ")");
  return assemble(spec, diagonal_subgroup(spec));
}

ExampleSet moderate_growth_set(int n, std::uint32_t p) {
  if (n < 3 || n > 8) throw Error(Errc::UnsupportedSpec, "moderate example needs 3 <= n <= 8");
  if (p < static_cast<std::uint32_t>(n) || p % 2 == 0 || !is_prime(p) || p > 20) {
    throw Error(Errc::UnsupportedSpec, "moderate example needs an odd prime p with n <= p <= 19");
  }
  GroupSpec spec(Family::SL, n, Field::make(2, static_cast<int>(p)));
  const Field& f = spec.field();
  const Fq g = f.primitive_element();
  const Matrix s = cycle_matrix(spec);

  std::vector<Matrix> p0;
  std::vector<int> e(n - 1, 1);
  while (true) {
    std::vector<Fq> d(n);
    Fq prod = f.one();
    for (int i = 0; i + 1 < n; ++i) {
      d[i] = f.pow(g, e[i]);
      prod = f.mul(prod, d[i]);
    }
    d[n - 1] = f.inv(prod);
    p0.push_back(diagonal(spec, d));
    int i = n - 2;
    while (i >= 0 && e[i] == n) e[i--] = 1;
    if (i < 0) break;
    ++e[i];
  }
  std::vector<Matrix> closed;
  for (const auto& m : p0) {
    Matrix x = m;
    for (int j = 0; j < n; ++j) {
      closed.push_back(x);
      x = spec.conjugate(s, x);
    }
  }
  return assemble(spec, GenSet(spec, std::move(closed)));
}

namespace {

GenSet symmetrized(const GroupSpec& spec, std::vector<Matrix> gens) {
  return symmetrize(GenSet(spec, std::move(gens)));
}

}  // namespace

GenSet standard_generators(const GroupSpec& spec, std::string_view preset) {
  const Field& f = spec.field();
  const int n = spec.n();
  const Fq g = f.primitive_element();
  std::vector<Matrix> gens;
  if (preset == "transvections") {
    for (int i = 0; i + 1 < n; ++i) {
      gens.push_back(elementary(spec, i, i + 1, f.one()));
      gens.push_back(elementary(spec, i + 1, i, f.one()));
    }
  } else if (preset == "weyl_plus_transvection") {
    gens.push_back(cycle_matrix(spec));
    gens.push_back(elementary(spec, 0, 1, f.one()));
    if (n == 2) gens.push_back(elementary(spec, 1, 0, f.one()));
  } else {
    throw Error(Errc::UnsupportedPreset, "unknown preset '" + std::string(preset) + "'");
  }
  if (!f.is_prime_field()) {
    std::vector<Fq> d(n, f.one());
    d[0] = g;
    d[1] = f.inv(g);
    gens.push_back(diagonal(spec, d));
  }
  if (spec.family() == Family::GL) {
    std::vector<Fq> d(n, f.one());
    d[0] = g;
    gens.push_back(diagonal(spec, d));
  }
  GenSet out = symmetrized(spec, std::move(gens));
  if (!verify_generation(out)) {
    throw Error(Errc::NotGenerating, "preset '" + std::string(preset) + "' does not generate " + spec.literal());
  }
  return out;
}

GenSet random_symmetric_set(const GroupSpec& spec, std::size_t size, Rng& rng) {
  return symmetrize(random_subset(spec, size, rng));
}

GenSet random_generating_set(const GroupSpec& spec, std::size_t size, std::uint64_t seed,
                             int max_attempts) {
  if (size < 2) throw Error(Errc::InvalidArgument, "random generating set needs size >= 2");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    GenSet s = random_symmetric_set(spec, size, rng);
    if (verify_generation(s)) return s;
  }
  throw Error(Errc::GaveUp, "no generating set of size " + std::to_string(size) + " after " +
                                std::to_string(max_attempts) + " attempts");
}

namespace {

struct Transvection {
  int i, j;
  Fq t;
};

std::optional<Transvection> as_transvection(const GroupSpec& spec, const Matrix& m) {
  const Fq zero = spec.field().zero();
  const Fq one = spec.field().one();
  std::optional<Transvection> found;
  for (int r = 0; r < spec.n(); ++r) {
    for (int c = 0; c < spec.n(); ++c) {
      const Fq v = m(r, c);
      if (r == c) {
        if (v != one) return std::nullopt;
      } else if (v != zero) {
        if (found) return std::nullopt;
        found = Transvection{r, c, v};
      }
    }
  }
  return found;
}

// F_p-subspace of F_q, kept as an echelon basis of coefficient vectors.
class PrimeSpan {
 public:
  explicit PrimeSpan(const Field* f) : f_(f) {}

  bool add(Fq t) {
    auto v = f_->coeffs(t);
    const std::uint32_t p = f_->p();
    for (const auto& row : rows_) {
      const int lead = lead_of(row);
      if (v[lead] == 0) continue;
      const std::uint64_t factor = v[lead];  // rows are normalized to leading 1
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = static_cast<std::uint32_t>((v[i] + (p - factor) * row[i]) % p);
      }
    }
    const int lead = lead_of(v);
    if (lead < 0) return false;
    const std::uint32_t inv = mod_inverse(v[lead], p);
    for (auto& x : v) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p);
    rows_.push_back(v);
    basis_.push_back(t);
    return true;
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Fq>& basis() const { return basis_; }

 private:
  static int lead_of(const std::vector<std::uint32_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) return static_cast<int>(i);
    }
    return -1;
  }
  static std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }

  const Field* f_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<Fq> basis_;
};

bool in_top_block(const GroupSpec& spec, const Matrix& m) {
  for (int r = 0; r < spec.n(); ++r) {
    for (int c = 0; c < spec.n(); ++c) {
      if ((r >= 2 || c >= 2) && m(r, c) != (r == c ? spec.field().one() : spec.field().zero())) {
        return false;
      }
    }
  }
  return true;
}

std::uint64_t det_subgroup_order(const GenSet& alpha) {
  const Field& f = alpha.spec().field();
  std::set<Fq> reached{f.one()};
  std::vector<Fq> frontier{f.one()};
  std::vector<Fq> dets;
  for (const auto& m : alpha) dets.push_back(alpha.spec().det(m));
  while (!frontier.empty()) {
    std::vector<Fq> next;
    for (auto x : frontier) {
      for (auto d : dets) {
        const Fq y = f.mul(d, x);
        if (reached.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return reached.size();
}

}  // namespace

GenerationCertificate certify_generation(const GenSet& alpha, const SetLimits& limits) {
  const GroupSpec& spec = alpha.spec();
  const Field& f = spec.field();
  const int n = spec.n();
  GenerationCertificate cert;
  cert.method = "transvections";

  std::vector<PrimeSpan> spans(n * n, PrimeSpan(&f));
  bool grew = false;
  auto record = [&](const Matrix& m) {
    if (auto tv = as_transvection(spec, m)) grew = spans[tv->i * n + tv->j].add(tv->t) || grew;
  };

  for (const auto& m : alpha) record(m);
  std::vector<Matrix> block;
  for (const auto& m : alpha) {
    if (in_top_block(spec, m)) block.push_back(m);
  }
  if (!block.empty()) {
    SetLimits small = limits;
    small.max_elements = std::min<std::uint64_t>(limits.max_elements, 2'000'000);
    for (const auto& m : subgroup_closure(GenSet(spec, block), small)) record(m);
  }

  std::vector<Matrix> conj;
  for (const auto& m : alpha) {
    conj.push_back(m);
    conj.push_back(spec.inverse(m));
  }
  do {
    grew = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto basis = spans[i * n + j].basis();
        for (auto t : basis) {
          const Matrix x = elementary(spec, i, j, t);
          for (const auto& g : conj) record(spec.conjugate(g, x));
          for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            const auto other = spans[j * n + k].basis();
            for (auto u : other) {
              const Matrix y = elementary(spec, j, k, u);
              // [x, y] = x y x^-1 y^-1 = I + t u e_ik
              record(spec.mul(spec.mul(x, y), spec.mul(spec.inverse(x), spec.inverse(y))));
            }
          }
        }
      }
    }
  } while (grew);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && spans[i * n + j].dim() == static_cast<std::size_t>(f.k())) ++cert.positions_complete;
    }
  }
  cert.certified = cert.positions_complete == n * (n - 1);
  if (spec.family() == Family::GL) {
    cert.det_subgroup_order = det_subgroup_order(alpha);
    cert.certified = cert.certified && cert.det_subgroup_order == f.q() - 1;
  }
  return cert;
}

bool verify_generation(const GenSet& alpha, std::uint64_t closure_cap, const SetLimits& limits) {
  if (alpha.empty()) return false;
  if (alpha.spec().order() <= closure_cap) return generates(alpha, limits).generates;
  return certify_generation(alpha, limits).certified;
}

}  // namespace growthlab
