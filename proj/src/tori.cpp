#include "growthlab/tori.hpp"

#include <algorithm>
#include <cmath>

#include "growthlab/error.hpp"

namespace growthlab {

UPoly charpoly(const GroupSpec& spec, const Matrix& m) {
  const Field& f = spec.field();
  const int n = spec.n();
  std::vector<std::vector<Fq>> h(n, std::vector<Fq>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[i][j] = m(i, j);
  }
  // Reduce to upper Hessenberg form by similarity transforms.
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i) {
      if (h[i][j] != f.zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
    }
    const Fq inv = f.inv(h[j + 1][j]);
    for (int i = j + 2; i < n; ++i) {
      const Fq factor = f.mul(h[i][j], inv);
      if (factor == f.zero()) continue;
      for (int c = 0; c < n; ++c) h[i][c] = f.sub(h[i][c], f.mul(factor, h[j + 1][c]));
      for (int r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(factor, h[r][i]));
    }
  }
  // p_m = (t - h[m-1][m-1]) p_{m-1} - sum_i h[m-1-i][m-1] (prod_{k=m-i}^{m-1} h[k][k-1]) p_{m-1-i}
  std::vector<UPoly> p{UPoly{f.one()}};
  for (int m_ = 1; m_ <= n; ++m_) {
    UPoly cur = upoly::mul(f, UPoly{f.neg(h[m_ - 1][m_ - 1]), f.one()}, p[m_ - 1]);
    Fq prod = f.one();
    for (int i = 1; i < m_; ++i) {
      prod = f.mul(prod, h[m_ - i][m_ - i - 1]);
      const Fq coef = f.mul(h[m_ - 1 - i][m_ - 1], prod);
      cur = upoly::sub(f, cur, upoly::scale(f, p[m_ - 1 - i], coef));
    }
    p.push_back(std::move(cur));
  }
  return p[n];
}

bool is_regular_semisimple(const GroupSpec& spec, const Matrix& m) {
  const Field& f = spec.field();
  const UPoly cp = charpoly(spec, m);
  const UPoly d = upoly::derivative(f, cp);
  if (d.empty()) return false;
  return upoly::degree(upoly::gcd(f, cp, d)) == 0;
}

namespace {

// Basis of the solution space of X M - M X = 0, each as an n x n matrix.
std::vector<Matrix> commutant_basis(const GroupSpec& spec, const Matrix& m) {
  const Field& f = spec.field();
  const int n = spec.n();
  const int vars = n * n;
  std::vector<std::vector<Fq>> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Fq> row(vars, f.zero());
      for (int k = 0; k < n; ++k) {
        row[i * n + k] = f.add(row[i * n + k], m(k, j));
        row[k * n + j] = f.sub(row[k * n + j], m(i, k));
      }
      rows.push_back(std::move(row));
    }
  }
  // Reduced row echelon form.
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < vars && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] != f.zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[sel], rows[r]);
    const Fq inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == f.zero()) continue;
      const Fq factor = rows[i][c];
      for (int k = 0; k < vars; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(vars, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (int free = 0; free < vars; ++free) {
    if (is_pivot[free]) continue;
    Matrix b = spec.zero_matrix();
    b(free / n, free % n) = f.one();
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) {
      const int pc = pivot_col[i];
      b(pc / n, pc % n) = f.neg(rows[i][free]);
    }
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace

GenSet centralizer(const GroupSpec& spec, const Matrix& m) {
  const Field& f = spec.field();
  const int n = spec.n();
  const auto basis = commutant_basis(spec, m);
  const int dim = static_cast<int>(basis.size());
  double points = std::pow(static_cast<double>(f.q()), dim);
  if (dim > n && points > 2401) {
    throw Error(Errc::SubspaceTooLarge, "commutant has dimension " + std::to_string(dim));
  }
  if (points > 5e7) throw Error(Errc::SubspaceTooLarge, "commutant has too many points");
  std::vector<std::uint32_t> coef(dim, 0);
  std::vector<Matrix> out;
  Matrix x = spec.zero_matrix();
  while (true) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Fq v = f.zero();
        for (int l = 0; l < dim; ++l) {
          if (coef[l]) v = f.add(v, f.mul(Fq{coef[l]}, basis[l](i, j)));
        }
        x(i, j) = v;
      }
    }
    if (spec.contains(x)) out.push_back(x);
    int l = dim - 1;
    while (l >= 0 && ++coef[l] == f.q()) coef[l--] = 0;
    if (l < 0) break;
  }
  return GenSet(spec, std::move(out));
}

std::string to_string(TorusKind kind) {
  switch (kind) {
    case TorusKind::Split: return "split";
    case TorusKind::Nonsplit: return "nonsplit";
    case TorusKind::Other: return "other";
  }
  return "other";
}

namespace {

void require_torus_support(const GroupSpec& spec) {
  const std::uint32_t q = spec.field().q();
  const bool ok = spec.family() == Family::SL &&
                  ((spec.n() == 2 && q <= 64) || (spec.n() == 3 && q <= 3));
  if (!ok) {
    throw Error(Errc::UnsupportedSpec,
                "torus enumeration supports SL(2,q) with q <= 64 and SL(3,q) with q <= 3, not " +
                    spec.literal());
  }
}

TorusKind kind_for(const GroupSpec& spec, std::uint64_t order) {
  const std::uint64_t q = spec.field().q();
  if (spec.n() == 2) {
    if (order == q - 1) return TorusKind::Split;
    if (order == q + 1) return TorusKind::Nonsplit;
    return TorusKind::Other;
  }
  if (order == (q - 1) * (q - 1)) return TorusKind::Split;
  if (order == q * q + q + 1) return TorusKind::Nonsplit;
  return TorusKind::Other;
}

bool order_fits_kind(const GroupSpec& spec, const Torus& t) {
  const std::uint64_t q = spec.field().q();
  if (spec.n() == 2) {
    return (t.kind == TorusKind::Split && t.order == q - 1) ||
           (t.kind == TorusKind::Nonsplit && t.order == q + 1);
  }
  return (t.kind == TorusKind::Split && t.order == (q - 1) * (q - 1)) ||
         (t.kind == TorusKind::Nonsplit && t.order == q * q + q + 1) ||
         (t.kind == TorusKind::Other && t.order == q * q - 1);
}

std::size_t index_of(const GenSet& g, const Matrix& m) {
  return static_cast<std::size_t>(std::lower_bound(g.begin(), g.end(), m) - g.begin());
}

std::vector<Torus> tori_of(const GroupSpec& spec, const GenSet& group, const std::vector<bool>& regular) {
  std::vector<bool> assigned(group.size(), false);
  std::vector<Torus> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (!regular[i] || assigned[i]) continue;
    Torus t{group[i], centralizer(spec, group[i]), GenSet::empty(spec)};
    std::vector<Matrix> reg;
    for (const auto& x : t.elements) {
      const std::size_t k = index_of(group, x);
      if (regular[k]) {
        reg.push_back(x);
        assigned[k] = true;
      }
    }
    t.regular = GenSet::from_canonical(spec, std::move(reg));
    t.order = t.elements.size();
    t.kind = kind_for(spec, t.order);
    t.dim = spec.n() - 1;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<Torus> maximal_tori(const GroupSpec& spec) {
  require_torus_support(spec);
  const GenSet group = enumerate_group(spec);
  std::vector<bool> regular(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) regular[i] = is_regular_semisimple(spec, group[i]);
  return tori_of(spec, group, regular);
}

TorusPartitionReport verify_torus_partition(const GroupSpec& spec) {
  require_torus_support(spec);
  TorusPartitionReport rep;
  const GenSet group = enumerate_group(spec);
  rep.group_order = group.size();
  std::vector<bool> regular(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    regular[i] = is_regular_semisimple(spec, group[i]);
    if (regular[i]) ++rep.regular_count;
  }
  const auto tori = tori_of(spec, group, regular);
  rep.tori = tori.size();

  std::vector<int> hits(group.size(), 0);
  std::uint64_t regular_parts = 0;
  rep.orders_match_kind = true;
  for (const auto& t : tori) {
    ++rep.kind_counts[to_string(t.kind)];
    rep.orders_match_kind = rep.orders_match_kind && order_fits_kind(spec, t);
    regular_parts += t.regular.size();
    for (const auto& x : t.regular) ++hits[index_of(group, x)];
  }
  rep.exactly_one = true;
  rep.union_is_regular = true;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (regular[i] && hits[i] != 1) rep.exactly_one = false;
    if ((hits[i] > 0) != regular[i]) rep.union_is_regular = false;
  }
  rep.count_identity = regular_parts + (group.size() - rep.regular_count) == group.size();

  rep.centralizers_match = true;
  Matrix xy = spec.zero_matrix(), yx = spec.zero_matrix();
  for (const auto& t : tori) {
    for (const auto& x : t.regular) {
      std::vector<Matrix> cent;
      for (const auto& y : group) {
        spec.mul_into(x, y, xy);
        spec.mul_into(y, x, yx);
        if (xy == yx) cent.push_back(y);
      }
      if (cent != t.elements.elements()) {
        rep.centralizers_match = false;
        break;
      }
    }
    if (!rep.centralizers_match) break;
  }
  return rep;
}

DichotomyReport dichotomy_report(const GenSet& alpha, const std::vector<Torus>& tori) {
  const GroupSpec& spec = alpha.spec();
  const int n = spec.n();
  DichotomyReport rep;
  rep.alpha_size = alpha.size();
  const GenSet quotient = product_set(alpha, inverse_set(alpha));
  const double a = static_cast<double>(alpha.size());
  rep.scale_torus = std::pow(a, 1.0 / (n + 1));
  rep.scale_torus_regular = std::pow(a, 1.0 / (n + 1) - 1.0 / (n * n - 1));
  const double mu_g = concentration_from_count(alpha.size(), n * n - 1);
  for (const auto& t : tori) {
    TorusRecord r;
    r.kind = t.kind;
    r.order = t.order;
    r.covered = intersection_size(alpha, t.regular) > 0;
    r.cap_alpha = intersection_size(alpha, t.elements);
    r.cap_alpha2 = intersection_size(quotient, t.elements);
    r.cap_alpha2_regular = intersection_size(quotient, t.regular);
    r.mu_t = concentration_from_count(r.cap_alpha, t.dim);
    r.mu_g = mu_g;
    if (r.covered) {
      ++rep.covered;
      ++rep.covered_hist[r.cap_alpha2];
    } else {
      ++rep.uncovered_hist[r.cap_alpha2];
    }
    rep.tori.push_back(r);
  }
  return rep;
}

DichotomyReport dichotomy_report(const GenSet& alpha) {
  return dichotomy_report(alpha, maximal_tori(alpha.spec()));
}

}  // namespace growthlab
