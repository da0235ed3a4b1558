#include "sunic/element.hpp"

#include <algorithm>

#include "triviality_cache.hpp"

namespace sunic {

namespace {

void push_letter(const GroupSpec& s, std::vector<Letter>& w, Letter l) {
  if (is_a(l)) {
    Fp e = a_exp(l) % s.p();
    if (!e) return;
    if (!w.empty() && is_a(w.back())) {
      Fp f = (a_exp(w.back()) + e) % s.p();
      if (f) w.back() = a_letter(f);
      else w.pop_back();
      return;
    }
    w.push_back(a_letter(e));
  } else {
    if (!l) return;
    if (!w.empty() && !is_a(w.back())) {
      std::uint32_t c = s.add(w.back(), l);
      if (c) w.back() = c;
      else w.pop_back();
      return;
    }
    w.push_back(l);
  }
}

Letter invert_letter(const GroupSpec& s, Letter l) {
  if (is_a(l)) return a_letter((s.p() - a_exp(l)) % s.p());
  return s.neg(l);
}

// Section at x of the word w, as a reduced word. a-letters contribute
// nothing; a B-letter contributes a^omega at 0 and rho(.) at p-1.
std::vector<Letter> section_word(const GroupSpec& s, const std::vector<Letter>& w, Fp x) {
  const Fp p = s.p();
  std::vector<Letter> rev;
  Fp pt = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Letter l = *it;
    if (is_a(l)) {
      pt = (pt + a_exp(l)) % p;
    } else if (pt == 0) {
      if (Fp e = s.omega(l)) rev.push_back(a_letter(e));
    } else if (pt == p - 1) {
      rev.push_back(s.rho(l));
    }
  }
  std::vector<Letter> out;
  out.reserve(rev.size());
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) push_letter(s, out, *it);
  return out;
}

Fp root_of(const GroupSpec& s, const std::vector<Letter>& w) {
  std::uint64_t r = 0;
  for (Letter l : w)
    if (is_a(l)) r += a_exp(l);
  return static_cast<Fp>(r % s.p());
}

bool trivial_rec(const GroupSpec& s, const std::vector<Letter>& w) {
  if (w.empty()) return true;
  if (w.size() == 1) return false;
  if (root_of(s, w)) return false;
  auto& cache = s.triviality_cache();
  bool known;
  if (cache.lookup(w, known)) return known;
  bool result = true;
  for (Fp x = 0; x < s.p() && result; ++x) result = trivial_rec(s, section_word(s, w, x));
  cache.store(w, result);
  return result;
}

void check_same(const Element& x, const Element& y) {
  if (x.spec() != y.spec() && !x.spec()->same_group(*y.spec()))
    throw Error(ErrorKind::SpecMismatch, "elements belong to different groups");
}

}  // namespace

Element::Element(SpecPtr spec, std::vector<Letter> letters) : spec_(std::move(spec)) {
  for (Letter l : letters) push(l);
}

Element Element::a(const SpecPtr& spec, std::int64_t e) {
  std::int64_t p = spec->p();
  Element x(spec);
  x.push(a_letter(static_cast<Fp>(((e % p) + p) % p)));
  return x;
}

Element Element::b(const SpecPtr& spec, std::uint32_t code) {
  if (code >= spec->b_order()) throw Error(ErrorKind::InvalidArgument, "B-code out of range");
  Element x(spec);
  x.push(code);
  return x;
}

Element Element::b(const SpecPtr& spec, const BVec& v) { return b(spec, spec->encode(v)); }

Element Element::basis(const SpecPtr& spec, std::size_t i) {
  if (i >= spec->m()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  return b(spec, spec->basis_code(i));
}

void Element::push(Letter l) { push_letter(*spec_, letters_, l); }

Element Element::inverse() const {
  Element r(spec_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back(invert_letter(*spec_, *it));
  return r;
}

Element Element::pow(std::int64_t k) const {
  Element base = k < 0 ? inverse() : *this;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Element r(spec_);
  while (n) {
    if (n & 1) r = multiply(r, base);
    n >>= 1;
    if (n) base = multiply(base, base);
  }
  return r;
}

Fp Element::root() const { return root_of(*spec_, letters_); }

Element multiply(const Element& x, const Element& y) {
  check_same(x, y);
  Element r = x;
  for (Letter l : y.letters()) r.push(l);
  return r;
}

Element conjugate(const Element& x, const Element& y) { return y.inverse() * x * y; }

Element commutator(const Element& x, const Element& y) {
  return x.inverse() * y.inverse() * x * y;
}

WreathForm wreath(const Element& x) {
  const auto& s = *x.spec();
  WreathForm w;
  w.root = x.root();
  for (Fp i = 0; i < s.p(); ++i)
    w.sections.emplace_back(x.spec(), section_word(s, x.letters(), i));
  return w;
}

Element section_at(const Element& x, const Vertex& v) {
  const auto& s = *x.spec();
  std::vector<Letter> w = x.letters();
  for (Fp d : v) {
    if (w.empty()) break;
    w = section_word(s, w, d);
  }
  return Element(x.spec(), std::move(w));
}

void apply_letter(const GroupSpec& s, Letter l, Vertex& v) {
  const Fp p = s.p();
  if (v.empty()) return;
  if (is_a(l)) {
    v[0] = (v[0] + a_exp(l)) % p;
    return;
  }
  std::uint32_t c = l;
  for (std::size_t i = 0; i < v.size() && c; ++i) {
    if (v[i] == 0) {
      if (i + 1 < v.size()) v[i + 1] = (v[i + 1] + s.omega(c)) % p;
      return;
    }
    if (v[i] != p - 1) return;
    c = s.rho(c);
  }
}

Vertex act_on_vertex(const Element& x, const Vertex& v) {
  Vertex r = v;
  const auto& s = *x.spec();
  for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it) apply_letter(s, *it, r);
  return r;
}

bool is_trivial(const Element& x) { return trivial_rec(*x.spec(), x.letters()); }

bool equal_in_group(const Element& x, const Element& y) { return is_trivial(x * y.inverse()); }

AbelImage abelianize(const Element& x) {
  const auto& s = *x.spec();
  AbelImage r;
  std::uint32_t b = 0;
  for (Letter l : x.letters()) {
    if (is_a(l)) r.a_exp = (r.a_exp + a_exp(l)) % s.p();
    else b = s.add(b, l);
  }
  r.b_sum = s.decode(b);
  return r;
}

bool in_derived_subgroup(const Element& x) {
  auto ab = abelianize(x);
  return ab.a_exp == 0 && ab.b_sum.is_zero();
}

OrderResult order_probe(const Element& x, std::uint64_t bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be >= 1");
  const std::uint64_t p = x.spec()->p();
  Element y = x;
  for (std::uint64_t k = 1; k <= bound; k *= p) {
    if (is_trivial(y)) return {true, k};
    if (k > bound / p) break;
    y = y.pow(static_cast<std::int64_t>(p));
  }
  return {false, 0};
}

std::size_t b_length(const Element& x) {
  return static_cast<std::size_t>(std::count_if(x.letters().begin(), x.letters().end(),
                                                 [](Letter l) { return !is_a(l); }));
}

Element theta(const Element& z) {
  if (z.spec()->p() != 2) throw Error(ErrorKind::WrongCharacteristic, "theta needs p = 2");
  if (!in_derived_subgroup(z))
    throw Error(ErrorKind::NotInDerivedSubgroup, "theta is defined on G'");
  auto w = wreath(z);
  auto a = Element::a(z.spec());
  return a * w.sections[0] * a * w.sections[1];
}

std::string_view to_string(ThetaClass c) {
  switch (c) {
    case ThetaClass::Trivial: return "Trivial";
    case ThetaClass::LengthTwo: return "LengthTwo";
    case ThetaClass::AxaBaX: return "axa(ba)^2lx";
    case ThetaClass::BaPower: return "(ba)^2l";
    case ThetaClass::Unstabilized: return "Unstabilized";
  }
  return "?";
}

ThetaClass theta_classify(const Element& z, std::int64_t* l_out) {
  const auto& w = z.letters();
  const Letter A = a_letter(1);
  if (w.empty()) return ThetaClass::Trivial;
  if (w.size() == 4 && ((w[0] == A && w[2] == A && w[1] == w[3] && !is_a(w[1])) ||
                        (w[1] == A && w[3] == A && w[0] == w[2] && !is_a(w[0]))))
    return ThetaClass::LengthTwo;
  auto wit = z.spec()->p() == 2 ? dihedral_witness(*z.spec()) : std::nullopt;
  if (!wit) return ThetaClass::Unstabilized;
  const Letter b = z.spec()->encode(*wit);
  // (ba)^{2l}, l >= 1
  if (w.size() % 4 == 0) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = w[i] == (i % 2 ? A : b);
    if (ok) {
      if (l_out) *l_out = static_cast<std::int64_t>(w.size() / 4);
      return ThetaClass::BaPower;
    }
  }
  // a x a (ba)^{2l} x, l >= 1
  if (w.size() >= 8 && w.size() % 4 == 0 && w[0] == A && w[2] == A && !is_a(w[1]) &&
      w.back() == w[1]) {
    bool ok = true;
    for (std::size_t i = 3; i + 1 < w.size() && ok; ++i) ok = w[i] == ((i - 3) % 2 ? A : b);
    if (ok) {
      if (l_out) *l_out = static_cast<std::int64_t>((w.size() - 4) / 4);
      return ThetaClass::AxaBaX;
    }
  }
  return ThetaClass::Unstabilized;
}

ThetaResult theta_stabilize(const Element& z, int max_iter) {
  if (z.spec()->p() != 2) throw Error(ErrorKind::WrongCharacteristic, "theta needs p = 2");
  if (!in_derived_subgroup(z))
    throw Error(ErrorKind::NotInDerivedSubgroup, "theta is defined on G'");
  ThetaResult r;
  Element cur = z;
  for (int it = 0;; ++it) {
    std::int64_t l = 0;
    ThetaClass c = theta_classify(cur, &l);
    if (c != ThetaClass::Unstabilized) {
      r.cls = c;
      r.l = l;
      return r;
    }
    if (it >= max_iter) break;
    Element next = theta(cur);
    if (b_length(next) > b_length(cur)) r.length_nonincreasing = false;
    r.trace.push_back(next);
    cur = std::move(next);
  }
  r.cls = ThetaClass::Unstabilized;
  return r;
}

CD find_cd(const GroupSpec& s) {
  if (s.p() != 2) throw Error(ErrorKind::WrongCharacteristic, "find_cd needs p = 2");
  if (s.m() < 2) throw Error(ErrorKind::StructureError, "find_cd needs m >= 2");
  auto in_b0 = [&](std::uint32_t v) { return s.omega(v) == 0; };
  auto in_b1 = [&](std::uint32_t v) { return s.omega(s.rho_inv(v)) == 0; };
  std::optional<BVec> d;
  for (std::uint32_t v = 1; v < s.b_order(); ++v)
    if (in_b0(v) && !in_b1(v)) {
      BVec bv = s.decode(v);
      if (!d || bv < *d) d = bv;
    }
  if (!d) throw Error(ErrorKind::StructureError, "B_0 \\ B_1 is empty");
  std::uint32_t dc = s.encode(*d);
  std::uint32_t c = s.rho_inv(dc);
  if (s.omega(c) == 1) return {s.decode(c), *d};
  // d not in B_1 forces omega(rho^{-1}(d)) = 1, so this is only a fallback.
  std::optional<BVec> best;
  for (std::uint32_t v = 1; v < s.b_order(); ++v)
    if (s.omega(v) == 1 && in_b0(s.rho(v)) && !in_b1(s.rho(v))) {
      BVec bv = s.decode(v);
      if (!best || bv < *best) best = bv;
    }
  if (!best) throw Error(ErrorKind::StructureError, "no c with psi(c) = (a, d)");
  return {*best, s.decode(s.rho(s.encode(*best)))};
}

Element phi_lift(const Element& x) {
  const auto& s = *x.spec();
  if (s.p() != 2) throw Error(ErrorKind::WrongCharacteristic, "phi needs p = 2");
  if (s.m() < 2) throw Error(ErrorKind::DegenerateCase, "phi needs m >= 2");
  auto cd = find_cd(s);
  std::uint32_t c = s.encode(cd.c);
  Element r(x.spec());
  for (Letter l : x.letters()) {
    if (is_a(l)) {
      r.push(a_letter(1));
      r.push(c);
      r.push(a_letter(1));
    } else {
      r.push(s.rho_inv(l));
    }
  }
  return r;
}

Element witness_element(const SpecPtr& spec) {
  if (spec->p() != 2) throw Error(ErrorKind::NoDihedralWitness, "no dihedral witness for p != 2");
  auto w = dihedral_witness(*spec);
  if (!w) throw Error(ErrorKind::NoDihedralWitness, "f(1) != 0 over F_2");
  return Element::b(spec, *w);
}

namespace detail {
std::size_t triviality_cache_size(const GroupSpec& spec) {
  auto& c = spec.triviality_cache();
  std::shared_lock lk(c.mu);
  return c.map.size();
}
}  // namespace detail

}  // namespace sunic
