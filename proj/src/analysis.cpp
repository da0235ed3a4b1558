#include "sunic/analysis.hpp"

#include <numeric>
#include <sstream>

#include "sunic/boundary.hpp"
#include "sunic/rec_system.hpp"
#include "sunic/word_syntax.hpp"

namespace sunic {

namespace {

Element ab_of(const SpecPtr& spec) { return Element::a(spec) * witness_element(spec); }

void check_hq_args(const SpecPtr& spec, std::int64_t q) {
  if (q < 1 || q % 2 == 0) throw Error(ErrorKind::EvenQ, "q must be odd and positive");
  witness_element(spec);
  if (spec->m() < 2) throw Error(ErrorKind::DegenerateCase, "H(q) needs m >= 2");
}

std::uint32_t witness_code(const SpecPtr& spec) { return witness_element(spec).letters().front(); }

std::string vec_string(const std::vector<Fp>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

SubgroupDesc HqDesc::subgroup() const { return {"H(" + std::to_string(q) + ")", generators, false}; }

HqDesc hq(const SpecPtr& spec, std::int64_t q) {
  check_hq_args(spec, q);
  HqDesc h;
  h.q = q;
  h.witness = *dihedral_witness(*spec);
  h.generators.push_back(ab_of(spec).pow(q));
  for (std::size_t i = 0; i < spec->m(); ++i) h.generators.push_back(Element::basis(spec, i));
  return h;
}

std::vector<Element> hq_stab_gens(const SpecPtr& spec, std::int64_t q) {
  check_hq_args(spec, q);
  Element t = Element::a(spec) * (witness_element(spec) * Element::a(spec)).pow(q - 1);
  std::vector<Element> out;
  for (std::size_t i = 0; i < spec->m(); ++i) out.push_back(Element::basis(spec, i));
  for (std::size_t i = 0; i < spec->m(); ++i) out.push_back(conjugate(Element::basis(spec, i), t));
  return out;
}

SubdirectLift subdirect_lift(const SpecPtr& spec, std::int64_t q, const Element& g) {
  check_hq_args(spec, q);
  Element a = Element::a(spec), b = witness_element(spec);
  // a -> b, x -> a rho^{-1}(x) a gives s1 with sections (g, y), y in <a, b>
  Element s1(spec);
  for (Letter l : g.letters()) {
    if (is_a(l))
      s1 = s1 * b;
    else
      s1 = s1 * a * Element::b(spec, spec->rho_inv(l)) * a;
  }
  Element y = section_at(s1, {1});
  const std::int64_t len = static_cast<std::int64_t>(y.size());
  Element ab = a * b;
  std::int64_t l = 0;
  bool odd = false;
  bool found = false;
  for (std::int64_t k = -len - 1; k <= len + 1 && !found; ++k) {
    if (equal_in_group(y, ab.pow(k))) {
      l = k, found = true;
    } else if (equal_in_group(y, ab.pow(k) * a)) {
      l = k, odd = true, found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InternalConsistency, "section is not in <a, b>");
  // 4m + l = q n
  std::int64_t n = ((l * q) % 4 + 4) % 4;
  std::int64_t m4 = (q * n - l) / 4;
  const CD cd = find_cd(*spec);
  Element c = Element::b(spec, cd.c);
  Element s2 = (a * c * a * b).pow(4 * m4);
  if (odd) s2 = a * b * a * s2;
  SubdirectLift r{s1 * s2, odd ? b : Element(spec), ab.pow(q * n), n};
  return r;
}

LambdaForm lambda_form(const Element& x) {
  const SpecPtr& spec = x.spec();
  if (x.root() != 0) throw Error(ErrorKind::NotLevelOneStabilized, "lambda needs x in St(1)");
  const std::uint32_t bc = witness_code(spec);
  const auto& L = x.letters();
  auto dihedral = [&](Letter l) { return is_a(l) || l == bc; };
  std::size_t i = 0;
  while (i < L.size() && dihedral(L[i])) ++i;
  LambdaForm f{Element(spec), Element(spec), Element(spec), 0};
  if (i == L.size()) {
    f.prefix = x;
    return f;
  }
  std::size_t j = L.size();
  while (j > i && dihedral(L[j - 1])) --j;
  f.prefix = Element(spec, {L.begin(), L.begin() + i});
  f.core = Element(spec, {L.begin() + i, L.begin() + j});
  f.suffix = Element(spec, {L.begin() + j, L.end()});
  Element a = Element::a(spec);
  if (f.prefix.root() != 0) {
    f.prefix = f.prefix * a;
    f.core = a * f.core;
  }
  if (f.suffix.root() != 0) {
    f.suffix = a * f.suffix;
    f.core = f.core * a;
  }
  f.lambda_hat = f.core.size();
  return f;
}

ScreenVerdict hq_screen(const Element& h, std::int64_t q) {
  ScreenVerdict v;
  auto mod = [q](std::int64_t x) { return ((x % q) + q) % q; };
  for (std::int64_t n = -3 * q; n <= 3 * q; ++n) {
    std::int64_t y = z_action(h, n);
    if (mod(y) != mod(n) && mod(y) != mod(-n)) {
      v.possibly_in = false;
      v.n = n;
      v.image = y;
      return v;
    }
  }
  return v;
}

namespace {

std::string verdict_string(const ScreenVerdict& v) {
  if (v.possibly_in) return "possibly-in-H";
  return "not-in-H(n=" + std::to_string(v.n) + "->" + std::to_string(v.image) + ")";
}

Fp point_after(const Element& x, Fp pt) { return act_on_vertex(x, {pt})[0]; }

}  // namespace

ReductionTrace reduction_trace(const SpecPtr& spec, std::int64_t q, const Element& g0, int max_steps) {
  check_hq_args(spec, q);
  ReductionTrace tr;
  tr.q = q;
  const Element a = Element::a(spec), b = witness_element(spec), ab = a * b;
  const Element abq = ab.pow(q), ba_q = abq.inverse(), ab2q = ab.pow(2 * q);

  ScreenVerdict v0 = hq_screen(g0, q);
  if (v0.possibly_in) throw Error(ErrorKind::ScreenInconclusive, "screen cannot certify g outside H(q)");
  Element g = g0;
  std::string note = verdict_string(v0);
  if (g.root() != 0) {
    g = g * abq;
    note += " g*(ab)^q";
  }
  LambdaForm f = lambda_form(g);
  // g = P C S, tracked through the loop
  Element P = f.prefix, C = f.core, S = f.suffix;
  tr.steps.push_back({0, g, f, note, true});

  for (int depth = 1; C.size() > 3 && depth <= max_steps; ++depth) {
    std::string notes;
    Element g1 = section_at(g, {1});
    ScreenVerdict v = hq_screen(g1, q);
    notes = verdict_string(v);
    if (v.possibly_in) {
      // then the 0-section lies outside H^{(ab)^{(q-1)/2}}; conjugate it over
      Element h = abq * b;
      g = conjugate(g, h);
      P = h.inverse() * P;
      S = S * h;
      g1 = section_at(g, {1});
      ScreenVerdict v2 = hq_screen(g1, q);
      notes += " conj(ab)^qb " + verdict_string(v2);
      if (v2.possibly_in)
        throw Error(ErrorKind::ScreenInconclusive, "screen cannot certify either section outside H(q)");
    }
    if (g1.root() != 0) {
      g = g * ab2q;
      S = S * ab2q;
      g1 = section_at(g, {1});
      notes += " g*(ab)^2q";
    }
    // sections along 1 of P, C, S
    const Fp s1 = point_after(S, 1), cs1 = point_after(C, s1);
    Element P1 = section_at(P, {cs1}), C1 = section_at(C, {s1}), S1 = section_at(S, {1});
    if (P1.root() != 0) {
      P1 = abq * P1;
      S1 = S1 * ba_q;
      g1 = abq * g1 * ba_q;
      g = ab2q * g * ab2q.inverse();
      notes += " (ab)^2q g (ba)^2q";
    }
    if (S1.root() != 0) {
      C1 = C1 * a;
      S1 = a * S1;
    }
    LambdaForm inner = lambda_form(C1);
    P = P1 * inner.prefix;
    C = inner.core;
    S = inner.suffix * S1;
    LambdaForm whole = lambda_form(g1);
    if (whole.core.size() < C.size()) {
      P = whole.prefix;
      C = whole.core;
      S = whole.suffix;
    }
    LambdaForm cur{P, C, S, C.size()};
    const std::size_t prev = tr.steps.back().form.lambda_hat;
    bool ok = cur.lambda_hat <= (prev + 3 + 1) / 2;
    tr.bounds_ok = tr.bounds_ok && ok;
    g = g1;
    tr.steps.push_back({depth, g, cur, notes, ok});
  }
  tr.reached = C.size() <= 3;
  return tr;
}

MaximalsReport count_finite_index_maximals(const SpecPtr& spec) {
  if (spec->degenerate()) throw Error(ErrorKind::DegenerateCase, "(2,1) is excluded");
  const Fp p = spec->p();
  const std::size_t d = spec->m() + 1;
  MaximalsReport r;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  r.nonzero_functionals = total - 1;
  // one functional per hyperplane: leading nonzero coordinate equal to 1
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<Fp> f(d);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      f[i] = static_cast<Fp>(c % p);
      c /= p;
    }
    std::size_t lead = 0;
    while (f[lead] == 0) ++lead;
    if (f[lead] != 1) continue;
    MaximalDesc md;
    md.functional = f;
    // kernel basis: e_j - f_j e_lead for j != lead
    for (std::size_t j = 0; j < d; ++j) {
      if (j == lead) continue;
      std::vector<Fp> v(d, 0);
      v[j] = 1;
      v[lead] = (p - f[j]) % p;
      md.kernel_basis.push_back(v);
    }
    std::ostringstream os;
    os << "<";
    for (std::size_t k = 0; k < md.kernel_basis.size(); ++k) {
      const auto& v = md.kernel_basis[k];
      Element e = Element::a(spec, v[0]) * Element::b(spec, BVec{{v.begin() + 1, v.end()}});
      os << (k ? ", " : "") << format_word(e);
    }
    os << "> G'";
    md.recipe = os.str();
    r.subgroups.push_back(md);
  }
  r.count = r.subgroups.size();
  return r;
}

SubgroupDesc maximal_subgroup_desc(const SpecPtr& spec, const MaximalDesc& d) {
  SubgroupDesc s = derived_subgroup_desc(spec);
  s.name = "M(" + vec_string(d.functional) + ")";
  for (const auto& v : d.kernel_basis)
    s.generators.push_back(Element::a(spec, v[0]) * Element::b(spec, BVec{{v.begin() + 1, v.end()}}));
  return s;
}

std::string ClassifyReport::records() const {
  std::ostringstream os;
  os << "record=classify p=" << p << " m=" << m << " f=" << polynomial << " faithful=" << (faithful ? "true" : "false")
     << " degenerate=" << (degenerate ? "true" : "false")
     << " torsion=" << (torsion ? (*torsion ? "true" : "false") : "n/a");
  os << " dihedral=";
  if (dihedral)
    os << "(" << vec_string(dihedral->coords) << ")";
  else
    os << "none";
  os << " x_plus_1=" << (x_plus_1 ? "true" : "false");
  os << " maximals=" << (maximals ? std::to_string(*maximals) : "n/a") << "\n";
  return os.str();
}

ClassifyReport classify(const SpecPtr& spec) {
  ClassifyReport r;
  r.polynomial = spec->polynomial_string();
  r.p = spec->p();
  r.m = spec->m();
  r.faithful = orbit_faithful(*spec);
  r.degenerate = spec->degenerate();
  if (!r.degenerate) {
    r.torsion = is_torsion(*spec);
    r.maximals = count_finite_index_maximals(spec).count;
  }
  if (spec->p() == 2) r.dihedral = dihedral_witness(*spec);
  // f(-1) with f monic of degree m
  std::int64_t val = (spec->m() % 2 == 0) ? 1 : static_cast<std::int64_t>(spec->p()) - 1;
  std::int64_t sign = 1;
  for (std::size_t i = 0; i < spec->m(); ++i) {
    val += sign * static_cast<std::int64_t>(spec->coeffs()[i]);
    sign = -sign;
  }
  r.x_plus_1 = ((val % spec->p()) + spec->p()) % spec->p() == 0;
  return r;
}

bool SuiteReport::passed() const {
  for (const auto& i : items)
    if (i.status == "fail") return false;
  return true;
}

std::string SuiteReport::records() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << "suite=" << suite << " item=" << i.item << " status=" << i.status;
    if (!i.witness.empty()) os << " witness=\"" << i.witness << "\"";
    os << "\n";
  }
  return os.str();
}

namespace {

struct SuiteBuilder {
  SuiteReport rep;
  void eq(const std::string& item, const Element& lhs, const Element& rhs) {
    bool ok = equal_in_group(lhs, rhs);
    rep.items.push_back({item, ok ? "pass" : "fail", ok ? "" : format_word(lhs) + " != " + format_word(rhs)});
  }
  void check(const std::string& item, bool ok, const std::string& witness = "") {
    rep.items.push_back({item, ok ? "pass" : "fail", witness});
  }
  void skip(const std::string& item, const std::string& why) { rep.items.push_back({item, "skip", why}); }
  // psi(x) = (x0, ..., x_{p-1})
  void psi(const std::string& item, const Element& x, const std::vector<Element>& secs) {
    auto w = wreath(x);
    bool ok = w.root == 0;
    for (std::size_t i = 0; i < secs.size() && ok; ++i) ok = equal_in_group(w.sections[i], secs[i]);
    rep.items.push_back({item, ok ? "pass" : "fail", ok ? "" : "sections differ for " + format_word(x)});
  }
};

}  // namespace

SuiteReport identity_suite(const SpecPtr& spec) {
  SuiteBuilder sb;
  sb.rep.suite = "identities";
  const Fp p = spec->p();
  const std::size_t m = spec->m();
  Element a = Element::a(spec);
  auto bi = [&](std::size_t i) { return Element::basis(spec, i); };
  auto rho = [&](const Element& x) { return Element::b(spec, spec->rho(x.letters().front())); };
  auto omega = [&](const Element& x) { return Element::a(spec, spec->omega(x.letters().front())); };

  sb.eq("a^p", a.pow(p), Element(spec));
  for (std::size_t i = 0; i < m; ++i) {
    sb.eq("b" + std::to_string(i) + "^p", bi(i).pow(p), Element(spec));
    std::vector<Element> secs(p, Element(spec));
    secs[0] = omega(bi(i));
    secs[p - 1] = rho(bi(i));
    sb.psi("psi(b" + std::to_string(i) + ")", bi(i), secs);
  }

  if (p != 2 || m < 2) {
    sb.skip("p2_identities", "need p = 2 and m >= 2");
    return sb.rep;
  }
  // projections of [a, b_i] along 1
  for (std::size_t i = 1; i + 1 < m; ++i)
    sb.eq("phi1[a,b" + std::to_string(i) + "]", section_at(commutator(a, bi(i)), {1}), bi(i + 1));
  Element last = bi(m - 1);
  sb.eq("phi1[a,b_last]", section_at(commutator(a, last), {1}), a * rho(last));
  if (m >= 3) sb.eq("phi11[a,b_{m-2}]", section_at(commutator(a, bi(m - 2)), {1, 1}), rho(last));
  sb.eq("phi11[a,b_last]^2", section_at(commutator(a, last).pow(2), {1, 1}), omega(rho(last)) * rho(rho(last)));
  // B_0 and its a-conjugates
  for (std::uint32_t c = 1; c < spec->b_order(); ++c) {
    if (spec->omega(c) != 0) continue;
    Element x = Element::b(spec, c);
    sb.psi("psi(B0:" + format_word(x) + ")", x, {Element(spec), rho(x)});
    sb.psi("psi(B0^a:" + format_word(x) + ")", conjugate(x, a), {rho(x), Element(spec)});
  }
  const CD cd = find_cd(*spec);
  Element c = Element::b(spec, cd.c), d = Element::b(spec, cd.d);
  sb.psi("psi(c)=(a,d)", c, {a, d});
  sb.eq("(ad)^4", (a * d).pow(4), Element(spec));
  if (m == 2) {
    for (std::uint32_t code = 1; code < spec->b_order(); ++code) {
      if (spec->omega(code) == 0) continue;
      Element x = Element::b(spec, code);
      for (int n = 1; n <= 3; ++n)
        sb.eq("phi1[a," + format_word(x) + "]^" + std::to_string(2 * n), section_at(commutator(a, x).pow(2 * n), {1}),
              commutator(a, rho(x)).pow(n));
    }
  }

  if (!dihedral_witness(*spec)) {
    sb.skip("witness_identities", "no dihedral witness");
    return sb.rep;
  }
  Element b = witness_element(spec), ab = a * b, ba = b * a;
  sb.psi("psi(b)=(a,b)", b, {a, b});
  sb.psi("psi(acab)", a * c * a * b, {d * a, ab});
  for (int k = 1; k <= 6; ++k) sb.eq("(a d^(ab)^" + std::to_string(k) + ")^4", (a * conjugate(d, ab.pow(k))).pow(4), Element(spec));
  for (std::int64_t q : {3, 5, 7}) {
    const std::string qs = std::to_string(q);
    sb.psi("psi((ab)^2q) q=" + qs, ab.pow(2 * q), {ba.pow(q), ab.pow(q)});
    sb.eq("a in H^(ab)^((q-1)/2) q=" + qs, a, ba.pow((q - 1) / 2) * ab.pow(q) * b * ab.pow((q - 1) / 2));
    Element t = a * ba.pow(q - 1);
    for (std::size_t i = 0; i < m; ++i) {
      Element x = bi(i);
      sb.psi("psi(b" + std::to_string(i) + "^(a(ba)^(q-1))) q=" + qs, conjugate(x, t),
             {conjugate(rho(x), ab.pow((q - 1) / 2)), conjugate(omega(x), ba.pow((q - 1) / 2))});
    }
  }
  // the lift phi on generators
  sb.psi("psi(phi(a))", phi_lift(a), {d, a});
  for (std::size_t i = 0; i < m; ++i)
    sb.psi("psi(phi(b" + std::to_string(i) + "))", phi_lift(bi(i)),
           {omega(Element::b(spec, spec->rho_inv(bi(i).letters().front()))), bi(i)});
  return sb.rep;
}

SuiteReport verify_suite(const SpecPtr& spec, int jobs) {
  SuiteReport rep = identity_suite(spec);
  rep.suite = "verify";
  auto add = [&](const std::string& item, bool ok, const std::string& w) {
    rep.items.push_back({item, ok ? "pass" : "fail", w});
  };
  auto skip = [&](const std::string& item, const std::string& w) { rep.items.push_back({item, "skip", w}); };

  ClassifyReport cl = classify(spec);
  add("faithful", cl.faithful, "");
  if (spec->degenerate()) {
    skip("csp", "degenerate (2,1)");
    skip("branch", "degenerate (2,1)");
    return rep;
  }
  const int m = static_cast<int>(spec->m());
  const bool odd = spec->p() != 2;
  auto fits = [&](int n) {
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) s *= spec->p();
    return s <= 1024;
  };
  int n0 = odd ? m + 4 : m + 2;
  for (int n = n0; n <= n0 + 2 && fits(n); ++n) {
    auto r = stab_in_derived_check(spec, n);
    add("stab_in_derived n=" + std::to_string(n), r.passed(),
        "|St|=" + r.order_stab.str() + " |G'|=" + r.order_derived.str());
  }
  if (!fits(n0)) skip("stab_in_derived", "level too large");
  if (spec->p() == 2 && m < 2) {
    skip("branch", "m < 2");
  } else {
    for (int n = 2; n <= 7 && fits(n); ++n) {
      auto r = branch_pair_check(spec, n);
      add("branch over " + r.over + " n=" + std::to_string(n), r.passed(),
          std::to_string(r.failed) + "/" + std::to_string(r.checked) + " failed");
    }
  }
  if (spec->p() == 2 && m >= 2 && dihedral_witness(*spec)) {
    for (std::int64_t q : {3, 5}) {
      auto h = hq(spec, q);
      for (int n = 1; n <= 8 && fits(n); ++n) {
        auto d = density_check(spec, h.subgroup(), n, jobs);
        add("density H(" + std::to_string(q) + ") n=" + std::to_string(n), d.dense(), "|pi_n G|=" + d.order_group.str());
      }
      auto pr = hq_properness_certificate(spec, q);
      add("proper H(" + std::to_string(q) + ")", pr.passed, pr.verdict);
    }
  }
  return rep;
}

}  // namespace sunic
