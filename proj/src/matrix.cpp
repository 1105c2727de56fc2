#include "growthlab/matrix.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "growthlab/error.hpp"

namespace growthlab {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Matrix::Matrix(int n, std::vector<Fq> entries) : n_(n), a_(std::move(entries)) {
  if (static_cast<int>(a_.size()) != n * n) {
    throw Error(Errc::InvalidArgument, "matrix needs n*n entries");
  }
}

GroupSpec::GroupSpec(Family family, int n, Field field)
    : family_(family), n_(n), field_(std::move(field)) {
  if (n < 2 || n > 8) throw Error(Errc::UnsupportedSpec, "matrix dimension must be in [2, 8]");
  coeff_bits_ = std::bit_width(field_.p() - 1);
  packed_bits_ = n_ * n_ * field_.k() * coeff_bits_;
  byte_width_ = field_.p() <= 256 ? 1 : (field_.p() <= 65536 ? 2 : 3);
}

GroupSpec GroupSpec::parse(std::string_view literal) {
  std::string_view s = strip(literal);
  Family family;
  if (s.substr(0, 3) == "SL(") {
    family = Family::SL;
  } else if (s.substr(0, 3) == "GL(") {
    family = Family::GL;
  } else {
    throw Error(Errc::ParseError, "expected SL(...) or GL(...), got '" + std::string(literal) + "'");
  }
  if (s.back() != ')') throw Error(Errc::ParseError, "unterminated group literal");
  s = s.substr(3, s.size() - 4);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) throw Error(Errc::ParseError, "group literal needs n and q");
  const std::string_view n_text = strip(s.substr(0, comma));
  int n = 0;
  auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
  if (ec != std::errc{} || ptr != n_text.data() + n_text.size()) {
    throw Error(Errc::ParseError, "bad dimension in '" + std::string(literal) + "'");
  }
  const std::string_view field_text = strip(s.substr(comma + 1));
  Field field = field_text.substr(0, 3) == "GF("
                    ? Field::parse(field_text)
                    : Field::parse("GF(" + std::string(field_text) + ")");
  return GroupSpec(family, n, std::move(field));
}

std::string GroupSpec::literal() const {
  std::string s = family_ == Family::SL ? "SL(" : "GL(";
  s += std::to_string(n_) + ",";
  if (field_.is_prime_field()) {
    s += std::to_string(field_.p());
  } else {
    s += field_.literal();
  }
  return s + ")";
}

BigInt GroupSpec::order() const {
  const BigInt q = field_.q();
  BigInt qn = 1;
  for (int i = 0; i < n_; ++i) qn *= q;
  BigInt order = 1;
  BigInt qi = 1;
  for (int i = 0; i < n_; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  if (family_ == Family::SL) order /= (q - 1);
  return order;
}

std::uint64_t GroupSpec::order_u64() const {
  const BigInt o = order();
  if (o > BigInt(INT64_MAX)) throw Error(Errc::SizeLimitExceeded, "group order exceeds 2^63");
  return o.convert_to<std::uint64_t>();
}

Matrix GroupSpec::identity() const {
  Matrix m = zero_matrix();
  for (int i = 0; i < n_; ++i) m(i, i) = field_.one();
  return m;
}

Matrix GroupSpec::zero_matrix() const {
  return Matrix(n_, std::vector<Fq>(static_cast<std::size_t>(n_) * n_, field_.zero()));
}

Matrix GroupSpec::from_ints(std::span<const std::int64_t> values) const {
  if (static_cast<int>(values.size()) != n_ * n_) {
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(n_ * n_) + " entries");
  }
  std::vector<Fq> e(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) e[i] = field_.from_int(values[i]);
  return Matrix(n_, std::move(e));
}

void GroupSpec::check_shape(const Matrix& a) const {
  if (a.n() != n_) throw Error(Errc::SpecMismatch, "matrix dimension does not match " + literal());
}

void GroupSpec::mul_into(const Matrix& a, const Matrix& b, Matrix& out) const {
  const Field& F = field_;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      Fq acc = F.zero();
      for (int l = 0; l < n_; ++l) acc = F.add(acc, F.mul(a(i, l), b(l, j)));
      out(i, j) = acc;
    }
  }
}

Matrix GroupSpec::mul(const Matrix& a, const Matrix& b) const {
  check_shape(a);
  check_shape(b);
  Matrix out = zero_matrix();
  mul_into(a, b, out);
  return out;
}

Matrix GroupSpec::transpose(const Matrix& a) const {
  check_shape(a);
  Matrix t = a;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t(i, j) = a(j, i);
  }
  return t;
}

Fq GroupSpec::det(const Matrix& a) const {
  check_shape(a);
  const Field& F = field_;
  Matrix m = a;
  Fq d = F.one();
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (m(r, col).code != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return F.zero();
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(m(pivot, j), m(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(col, col));
    const Fq inv = F.inv(m(col, col));
    for (int r = col + 1; r < n_; ++r) {
      if (m(r, col).code == 0) continue;
      const Fq f = F.mul(m(r, col), inv);
      for (int j = col; j < n_; ++j) m(r, j) = F.sub(m(r, j), F.mul(f, m(col, j)));
    }
  }
  return d;
}

Matrix GroupSpec::inverse(const Matrix& a) const {
  check_shape(a);
  const Field& F = field_;
  Matrix m = a;
  Matrix inv = identity();
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (m(r, col).code != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error(Errc::Singular, "matrix is not invertible");
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Fq s = F.inv(m(col, col));
    for (int j = 0; j < n_; ++j) {
      m(col, j) = F.mul(m(col, j), s);
      inv(col, j) = F.mul(inv(col, j), s);
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || m(r, col).code == 0) continue;
      const Fq f = m(r, col);
      for (int j = 0; j < n_; ++j) {
        m(r, j) = F.sub(m(r, j), F.mul(f, m(col, j)));
        inv(r, j) = F.sub(inv(r, j), F.mul(f, inv(col, j)));
      }
    }
  }
  return inv;
}

Matrix GroupSpec::conjugate(const Matrix& g, const Matrix& x) const {
  return mul(mul(g, x), inverse(g));
}

Fq GroupSpec::trace(const Matrix& a) const {
  check_shape(a);
  Fq t = field_.zero();
  for (int i = 0; i < n_; ++i) t = field_.add(t, a(i, i));
  return t;
}

bool GroupSpec::is_identity(const Matrix& a) const {
  if (a.n() != n_) return false;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (a(i, j) != (i == j ? field_.one() : field_.zero())) return false;
    }
  }
  return true;
}

bool GroupSpec::contains(const Matrix& a) const {
  if (a.n() != n_) return false;
  for (Fq e : a.entries()) {
    if (e.code >= field_.q()) return false;
  }
  const Fq d = det(a);
  return family_ == Family::SL ? d == field_.one() : d.code != 0;
}

std::string GroupSpec::encode(const Matrix& a) const {
  check_shape(a);
  std::string out;
  out.reserve(static_cast<std::size_t>(n_) * n_ * field_.k() * byte_width_);
  for (Fq e : a.entries()) {
    for (int i = 0; i < field_.k(); ++i) {
      const std::uint32_t c = field_.coeff(e, i);
      for (int b = byte_width_ - 1; b >= 0; --b) {
        out.push_back(static_cast<char>((c >> (8 * b)) & 0xff));
      }
    }
  }
  return out;
}

Matrix GroupSpec::decode(std::string_view bytes) const {
  const std::size_t per_entry = static_cast<std::size_t>(field_.k()) * byte_width_;
  if (bytes.size() != per_entry * n_ * n_) throw Error(Errc::ParseError, "encoding has wrong length");
  std::vector<Fq> entries(static_cast<std::size_t>(n_) * n_);
  std::vector<std::uint32_t> coeffs(field_.k());
  std::size_t pos = 0;
  for (auto& e : entries) {
    for (int i = 0; i < field_.k(); ++i) {
      std::uint32_t c = 0;
      for (int b = 0; b < byte_width_; ++b) c = (c << 8) | static_cast<unsigned char>(bytes[pos++]);
      if (c >= field_.p()) throw Error(Errc::ParseError, "encoded coefficient out of range");
      coeffs[i] = c;
    }
    e = field_.from_coeffs(coeffs);
  }
  return Matrix(n_, std::move(entries));
}

std::uint64_t GroupSpec::pack(const Matrix& a) const {
  std::uint64_t key = 0;
  if (field_.k() == 1) {
    for (Fq e : a.entries()) key = (key << coeff_bits_) | e.code;
    return key;
  }
  for (Fq e : a.entries()) {
    for (int i = 0; i < field_.k(); ++i) key = (key << coeff_bits_) | field_.coeff(e, i);
  }
  return key;
}

Matrix GroupSpec::unpack(std::uint64_t key) const {
  const std::uint64_t mask = (std::uint64_t{1} << coeff_bits_) - 1;
  const int k = field_.k();
  std::vector<Fq> entries(static_cast<std::size_t>(n_) * n_);
  if (k == 1) {
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      it->code = static_cast<std::uint32_t>(key & mask);
      key >>= coeff_bits_;
    }
    return Matrix(n_, std::move(entries));
  }
  std::vector<std::uint32_t> coeffs(k);
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    for (int i = k - 1; i >= 0; --i) {
      coeffs[i] = static_cast<std::uint32_t>(key & mask);
      key >>= coeff_bits_;
    }
    *it = field_.from_coeffs(coeffs);
  }
  return Matrix(n_, std::move(entries));
}

std::string GroupSpec::format(const Matrix& a) const {
  check_shape(a);
  std::string s;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (i) s += ';';
    s += field_.format(a.entries()[i]);
  }
  return s;
}

Matrix GroupSpec::parse_matrix(std::string_view line) const {
  std::vector<Fq> entries;
  line = strip(line);
  while (true) {
    const auto semi = line.find(';');
    entries.push_back(field_.parse_element(line.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    line.remove_prefix(semi + 1);
  }
  if (static_cast<int>(entries.size()) != n_ * n_) {
    throw Error(Errc::ParseError, "expected " + std::to_string(n_ * n_) + " entries per matrix");
  }
  return Matrix(n_, std::move(entries));
}

std::vector<Matrix> read_matrices(const GroupSpec& spec, std::istream& in) {
  std::vector<Matrix> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view s = strip(line);
    if (s.empty() || s.front() == '#') continue;
    out.push_back(spec.parse_matrix(s));
  }
  return out;
}

std::vector<Matrix> read_matrix_file(const GroupSpec& spec, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigError, "cannot open matrix file '" + path + "'");
  return read_matrices(spec, in);
}

void write_matrices(const GroupSpec& spec, std::ostream& out, std::span<const Matrix> mats) {
  for (const auto& m : mats) out << spec.format(m) << '\n';
}

}  // namespace growthlab
