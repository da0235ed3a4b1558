#include "sunic/core_algebra.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "triviality_cache.hpp"

namespace sunic {

bool BVec::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Fp c) { return c == 0; });
}

std::ostream& operator<<(std::ostream& os, const BVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) os << ',';
    os << v.coords[i];
  }
  return os << ')';
}

namespace {

Fp inv_mod(Fp x, Fp p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, b = x % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Fp>(r);
}

Fp reduce(std::int64_t v, Fp p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Fp>(r);
}

Matrix mat_mul(const Matrix& x, const Matrix& y, Fp p) {
  std::size_t n = x.size();
  Matrix r(n, std::vector<Fp>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!x[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        r[i][j] = static_cast<Fp>((r[i][j] + std::uint64_t(x[i][k]) * y[k][j]) % p);
    }
  return r;
}

std::vector<Fp> mat_vec(const Matrix& x, const std::vector<Fp>& v, Fp p) {
  std::vector<Fp> r(v.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += std::uint64_t(x[i][j]) * v[j];
    r[i] = static_cast<Fp>(s % p);
  }
  return r;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(const std::string& s, int line) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size())
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": bad integer '" + s + "'");
  return v;
}

}  // namespace

Subspace::Subspace(Fp p, std::size_t m, std::vector<std::vector<Fp>> rows)
    : p_(p), m_(m) {
  // Reduced row echelon form.
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Fp inv = inv_mod(rows[r][col] % p, p);
    for (auto& c : rows[r]) c = static_cast<Fp>(std::uint64_t(c) * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] % p == 0) continue;
      Fp f = rows[i][col] % p;
      for (std::size_t j = 0; j < m; ++j)
        rows[i][j] = static_cast<Fp>((rows[i][j] + std::uint64_t(p - f) * rows[r][j]) % p);
    }
    pivots_.push_back(col);
    ++r;
  }
  rows.resize(r);
  basis_ = std::move(rows);
}

bool Subspace::contains(const BVec& v) const {
  if (v.coords.size() != m_) return false;
  std::vector<Fp> w = v.coords;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Fp f = w[pivots_[i]] % p_;
    if (!f) continue;
    for (std::size_t j = 0; j < m_; ++j)
      w[j] = static_cast<Fp>((w[j] + std::uint64_t(p_ - f) * basis_[i][j]) % p_);
  }
  return std::all_of(w.begin(), w.end(), [this](Fp c) { return c % p_ == 0; });
}

std::vector<Fp> GroupSpec::omega_row() const {
  std::vector<Fp> r(m(), 0);
  r.back() = 1;
  return r;
}

std::uint32_t GroupSpec::encode(const BVec& v) const {
  if (v.coords.size() != m())
    throw Error(ErrorKind::InvalidArgument, "B-vector has wrong length");
  std::uint32_t code = 0;
  for (std::size_t i = m(); i-- > 0;) code = code * p_ + (v.coords[i] % p_);
  return code;
}

BVec GroupSpec::decode(std::uint32_t code) const {
  BVec v;
  v.coords.resize(m());
  for (std::size_t i = 0; i < m(); ++i) {
    v.coords[i] = code % p_;
    code /= p_;
  }
  return v;
}

std::uint32_t GroupSpec::basis_code(std::size_t i) const {
  std::uint32_t c = 1;
  for (std::size_t k = 0; k < i; ++k) c *= p_;
  return c;
}

std::uint32_t GroupSpec::rho_pow(std::uint32_t code, long k) const {
  if (k >= 0)
    for (long i = 0; i < k; ++i) code = rho_[code];
  else
    for (long i = 0; i < -k; ++i) code = rho_inv_[code];
  return code;
}

std::uint32_t GroupSpec::add(std::uint32_t x, std::uint32_t y) const {
  if (p_ == 2) return x ^ y;
  std::uint32_t r = 0, mul = 1;
  for (std::size_t i = 0; i < m(); ++i) {
    r += ((x % p_ + y % p_) % p_) * mul;
    x /= p_;
    y /= p_;
    mul *= p_;
  }
  return r;
}

std::uint32_t GroupSpec::neg(std::uint32_t x) const {
  if (p_ == 2) return x;
  std::uint32_t r = 0, mul = 1;
  for (std::size_t i = 0; i < m(); ++i) {
    r += ((p_ - x % p_) % p_) * mul;
    x /= p_;
    mul *= p_;
  }
  return r;
}

std::string GroupSpec::polynomial_string() const {
  std::ostringstream os;
  os << "x";
  if (m() > 1) os << '^' << m();
  for (std::size_t i = m(); i-- > 0;) {
    Fp c = coeffs_[i];
    if (!c) continue;
    os << '+';
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

SpecPtr make_spec(std::int64_t p, const std::vector<std::int64_t>& coeffs) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
  if (coeffs.empty()) throw Error(ErrorKind::EmptyPolynomial, "no coefficients given");
  Fp pp = static_cast<Fp>(p);
  std::vector<Fp> a;
  for (auto c : coeffs) a.push_back(reduce(c, pp));
  if (a[0] == 0) throw Error(ErrorKind::NonInvertiblePolynomial, "constant term is 0 mod p");

  std::uint64_t order = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    order *= pp;
    if (order > kMaxBOrder)
      throw Error(ErrorKind::SpecTooLarge, "p^m exceeds 2^20");
  }

  std::shared_ptr<GroupSpec> s(new GroupSpec());
  s->p_ = pp;
  s->coeffs_ = a;
  s->b_order_ = static_cast<std::uint32_t>(order);
  std::size_t m = a.size();

  Matrix M(m, std::vector<Fp>(m, 0));
  for (std::size_t i = 1; i < m; ++i) M[i][i - 1] = 1;
  for (std::size_t i = 0; i < m; ++i) M[i][m - 1] = (pp - a[i]) % pp;
  s->rho_matrix_ = M;

  // f(M) = 0
  Matrix acc(m, std::vector<Fp>(m, 0));
  Matrix pw(m, std::vector<Fp>(m, 0));
  for (std::size_t i = 0; i < m; ++i) pw[i][i] = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    Fp c = k == m ? 1 : a[k];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        acc[i][j] = static_cast<Fp>((acc[i][j] + std::uint64_t(c) * pw[i][j]) % pp);
    pw = mat_mul(pw, M, pp);
  }
  for (auto& row : acc)
    for (Fp c : row)
      if (c) throw Error(ErrorKind::InternalConsistency, "f(rho) != 0");

  s->rho_.resize(order);
  s->rho_inv_.resize(order);
  s->omega_.resize(order);
  for (std::uint32_t code = 0; code < order; ++code) {
    BVec v = s->decode(code);
    std::uint32_t img = s->encode(BVec{mat_vec(M, v.coords, pp)});
    s->rho_[code] = img;
    s->rho_inv_[img] = code;
    s->omega_[code] = v.coords[m - 1];
  }
  s->cache_ = std::make_shared<detail::TrivialityCache>();

  if (!orbit_faithful(*s))
    throw Error(ErrorKind::InternalConsistency, "a rho-orbit lies in ker omega");
  return s;
}

BVec rho_apply(const GroupSpec& spec, const BVec& v) {
  return BVec{mat_vec(spec.rho_matrix(), v.coords, spec.p())};
}

Fp omega_apply(const GroupSpec& spec, const BVec& v) { return v.coords.back() % spec.p(); }

Subspace subspace_Bi(const GroupSpec& spec, long i) {
  std::vector<std::vector<Fp>> rows;
  for (std::size_t k = 0; k + 1 < spec.m(); ++k)
    rows.push_back(spec.decode(spec.rho_pow(spec.basis_code(k), i)).coords);
  return Subspace(spec.p(), spec.m(), std::move(rows));
}

std::uint64_t rho_order(const GroupSpec& spec) {
  // lcm of orbit lengths
  std::vector<char> seen(spec.b_order(), 0);
  std::uint64_t l = 1;
  for (std::uint32_t v = 1; v < spec.b_order(); ++v) {
    if (seen[v]) continue;
    std::uint64_t len = 0;
    std::uint32_t w = v;
    do {
      seen[w] = 1;
      w = spec.rho(w);
      ++len;
    } while (w != v);
    l = std::lcm(l, len);
  }
  return l;
}

namespace {

// Returns (all orbits leave ker omega, all orbits meet ker omega).
std::pair<bool, bool> orbit_walk(const GroupSpec& spec) {
  std::vector<char> seen(spec.b_order(), 0);
  bool faithful = true, meets = true;
  for (std::uint32_t v = 1; v < spec.b_order(); ++v) {
    if (seen[v]) continue;
    bool hit_nonzero = false, hit_kernel = false;
    std::uint32_t w = v;
    do {
      seen[w] = 1;
      if (spec.omega(w)) hit_nonzero = true;
      else hit_kernel = true;
      w = spec.rho(w);
    } while (w != v);
    faithful = faithful && hit_nonzero;
    meets = meets && hit_kernel;
  }
  return {faithful, meets};
}

}  // namespace

bool orbit_faithful(const GroupSpec& spec) { return orbit_walk(spec).first; }

bool is_torsion(const GroupSpec& spec) {
  if (spec.degenerate())
    throw Error(ErrorKind::DegenerateCase, "(2,1) is the infinite dihedral group");
  return orbit_walk(spec).second;
}

bool is_torsion_by_covering(const GroupSpec& spec) {
  if (spec.degenerate())
    throw Error(ErrorKind::DegenerateCase, "(2,1) is the infinite dihedral group");
  // Union of B_0..B_{r-1} over one full period of rho; B_i is periodic in i.
  std::uint64_t period = rho_order(spec);
  std::vector<char> covered(spec.b_order(), 0);
  covered[0] = 1;
  std::vector<Subspace> subs;
  for (std::uint64_t i = 0; i < period; ++i) subs.push_back(subspace_Bi(spec, static_cast<long>(i)));
  for (std::uint32_t v = 1; v < spec.b_order(); ++v) {
    BVec bv = spec.decode(v);
    for (const auto& s : subs)
      if (s.contains(bv)) {
        covered[v] = 1;
        break;
      }
    if (!covered[v]) return false;
  }
  return true;
}

bool divisible_by_x_minus_one(const GroupSpec& spec) {
  std::uint64_t s = 1;
  for (Fp c : spec.coeffs()) s += c;
  return s % spec.p() == 0;
}

std::optional<BVec> dihedral_witness(const GroupSpec& spec) {
  if (spec.p() != 2) throw Error(ErrorKind::WrongCharacteristic, "dihedral witness needs p = 2");
  for (std::uint32_t v = 1; v < spec.b_order(); ++v)
    if (spec.rho(v) == v && spec.omega(v) == 1) {
      // lexicographic minimum over all fixed vectors; at most one exists
      // since a companion matrix has a one-dimensional 1-eigenspace.
      return spec.decode(v);
    }
  return std::nullopt;
}

SpecPtr parse_spec_text(std::string_view text) {
  std::optional<std::int64_t> p;
  std::optional<std::vector<std::int64_t>> f;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": expected key = value");
    std::string key = trim(std::string_view(s).substr(0, eq));
    std::string val = trim(std::string_view(s).substr(eq + 1));
    if (key == "p") {
      if (p) throw Error(ErrorKind::ParseError, "duplicate key p");
      p = parse_int(val, line);
    } else if (key == "f") {
      if (f) throw Error(ErrorKind::ParseError, "duplicate key f");
      std::vector<std::int64_t> cs;
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ',')) cs.push_back(parse_int(trim(item), line));
      if (!val.empty() && val.back() == ',')
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": trailing comma");
      f = std::move(cs);
    } else {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  if (!p) throw Error(ErrorKind::ParseError, "missing p");
  if (!f) throw Error(ErrorKind::ParseError, "missing f");
  return make_spec(*p, *f);
}

SpecPtr load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

}  // namespace sunic
