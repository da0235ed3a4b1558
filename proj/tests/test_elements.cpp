#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "common.hpp"

using namespace sunic;
using testutil::ge;
using testutil::grig;
using testutil::random_word;

namespace {

Element w(const SpecPtr& s, const char* text) { return parse_word(s, text); }

// Hand-written action of the GE generators: b0 = (1, b1), b1 = (a, b0),
// acting on binary strings. Independent of the library's letter tables.
void ge_apply(char g, Vertex& v, std::size_t i) {
  if (i >= v.size()) return;
  if (g == 'a') {
    v[i] ^= 1;
    return;
  }
  if (g == '0') {  // b0
    if (v[i] == 1) ge_apply('1', v, i + 1);
    return;
  }
  if (g == '1') {  // b1
    if (v[i] == 0) ge_apply('a', v, i + 1);
    else ge_apply('0', v, i + 1);
  }
}

bool trivial_on_level(const Element& x, int n) {
  for (auto& v : testutil::all_vertices(x.spec()->p(), n))
    if (act_on_vertex(x, v) != v) return false;
  return true;
}

}  // namespace

TEST_CASE("multiply reduces freely") {
  auto s = ge();
  CHECK(w(s, "a a").empty());
  CHECK(w(s, "b0 b1") == Element::b(s, BVec{{1, 1}}));
  CHECK((w(s, "a b1") * w(s, "b1 a")).empty());
  auto f = testutil::fg();
  CHECK(w(f, "a a a").empty());
  CHECK(format_word(w(f, "a a")) == "a^2");
  CHECK(format_word(w(f, "a^-1 b0^2")) == "a^2 B<2>");
}

TEST_CASE("wreath recursion of generators") {
  auto s = ge();
  auto wb1 = wreath(w(s, "b1"));
  CHECK(wb1.root == 0);
  CHECK(wb1.sections[0] == w(s, "a"));
  CHECK(wb1.sections[1] == w(s, "b0"));
  auto wa = wreath(w(s, "a"));
  CHECK(wa.root == 1);
  CHECK(wa.sections[0].empty());
  CHECK(wa.sections[1].empty());
  auto wab = wreath(w(s, "a b b a"));
  CHECK(wab.root == 0);
  CHECK(wab.sections[0].empty());
  // FG: b = (a, 1, b)
  auto f = testutil::fg();
  auto wf = wreath(w(f, "b0"));
  CHECK(wf.sections[0] == w(f, "a"));
  CHECK(wf.sections[1].empty());
  CHECK(wf.sections[2] == w(f, "b0"));
}

TEST_CASE("section_at and act_on_vertex") {
  auto s = ge();
  CHECK(section_at(w(s, "b0"), {1}) == w(s, "b1"));
  CHECK(section_at(w(s, "a"), {0, 1, 1}).empty());
  // psi((ab)^{2k}) = ((ba)^k, (ab)^k)
  for (int k = 1; k <= 4; ++k) {
    auto x = w(s, "(a b)").pow(2 * k);
    CHECK(equal_in_group(section_at(x, {1}), w(s, "a b").pow(k)));
    CHECK(equal_in_group(section_at(x, {0}), w(s, "b a").pow(k)));
  }
  CHECK(act_on_vertex(w(s, "a"), {0, 1, 1}) == Vertex{1, 1, 1});
  CHECK(act_on_vertex(w(s, "b"), {0, 1}) == Vertex{0, 0});
  CHECK(act_on_vertex(Element::identity(s), {1, 0, 1}) == Vertex{1, 0, 1});
}

TEST_CASE("library action matches the hand-written GE action") {
  auto s = ge();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    auto x = random_word(s, rng, 20);
    for (auto& v : testutil::all_vertices(2, 7)) {
      Vertex u = v;
      for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it) {
        Letter l = *it;
        if (is_a(l)) ge_apply('a', u, 0);
        else {
          // code: bit0 = b0, bit1 = b1; B is abelian so order is irrelevant
          if (l & 1) ge_apply('0', u, 0);
          if (l & 2) ge_apply('1', u, 0);
        }
      }
      CHECK(act_on_vertex(x, v) == u);
    }
  }
}

TEST_CASE("word problem examples") {
  auto s = ge();
  CHECK(is_trivial(w(s, "(a b0)^4")));
  CHECK(is_trivial(w(s, "(a d)^4")));
  CHECK_FALSE(is_trivial(w(s, "b0")));
  CHECK(is_trivial(w(s, "[b0, b1]")));
  CHECK_FALSE(is_trivial(w(s, "(a b0)^2")));
  auto g = grig();
  CHECK(is_trivial(w(g, "(a b0)^4")));
  CHECK(is_trivial(w(g, "(a b1)^16")));
  CHECK_FALSE(is_trivial(w(g, "(a b1)^8")));
}

TEST_CASE("is_trivial agrees with level evaluation") {
  for (auto s : {ge(), grig(), testutil::fg(), make_spec(2, {1, 1, 0, 1})}) {
    std::mt19937_64 rng(11);
    int n = s->p() == 2 ? 10 : 6;
    int hits = 0;
    for (int t = 0; t < 300; ++t) {
      // bias towards trivial words: x * y * x^-1 * ... built from short pieces
      auto x = random_word(s, rng, 8);
      auto y = random_word(s, rng, 8);
      Element z = (t % 3 == 0) ? commutator(x, y).pow(static_cast<std::int64_t>(s->p()) * 4)
                               : random_word(s, rng, 24);
      bool tr = is_trivial(z);
      hits += tr;
      if (tr) CHECK(trivial_on_level(z, n));
      else {
        // a nontrivial element must move some vertex at some level; the
        // contraction depth bound is about log2(length) + m + 2 levels
        bool moved = !trivial_on_level(z, n + 4);
        CHECK(moved);
      }
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("group axioms on random words") {
  auto s = ge();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    auto x = random_word(s, rng, 40), y = random_word(s, rng, 40), z = random_word(s, rng, 40);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * Element::identity(s)) == x);
    CHECK((Element::identity(s) * x) == x);
    CHECK(is_trivial(x.inverse() * x));
  }
}

TEST_CASE("wreath recomposition reproduces the action") {
  std::mt19937_64 rng(5);
  for (auto s : {ge(), testutil::fg()}) {
    int n = s->p() == 2 ? 6 : 4;
    for (int t = 0; t < 100; ++t) {
      auto x = random_word(s, rng, 30);
      auto wf = wreath(x);
      for (auto& v : testutil::all_vertices(s->p(), n + 1)) {
        Vertex tail(v.begin() + 1, v.end());
        Vertex expect{(v[0] + wf.root) % s->p()};
        auto img = act_on_vertex(wf.sections[v[0]], tail);
        expect.insert(expect.end(), img.begin(), img.end());
        CHECK(act_on_vertex(x, v) == expect);
      }
    }
  }
}

TEST_CASE("contraction of sections") {
  std::mt19937_64 rng(9);
  for (auto s : {ge(), grig(), testutil::fg(), testutil::dinf()}) {
    for (int t = 0; t < 500; ++t) {
      auto x = random_word(s, rng, 60);
      if (x.size() < 2) continue;
      for (auto& sec : wreath(x).sections) CHECK(sec.size() <= (x.size() + 2) / 2);
    }
  }
}

TEST_CASE("abelianization") {
  auto s = ge();
  auto ab = abelianize(w(s, "[a, b1]"));
  CHECK(ab.a_exp == 0);
  CHECK(ab.b_sum.is_zero());
  auto ab2 = abelianize(w(s, "a b0"));
  CHECK(ab2.a_exp == 1);
  CHECK(ab2.b_sum == BVec{{1, 0}});
  CHECK(in_derived_subgroup(w(s, "(a b0)^4")));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    auto x = random_word(s, rng, 20), y = random_word(s, rng, 20);
    auto axy = abelianize(x * y), ax = abelianize(x), ay = abelianize(y);
    CHECK(axy.a_exp == (ax.a_exp + ay.a_exp) % 2);
    CHECK(s->encode(axy.b_sum) == s->add(s->encode(ax.b_sum), s->encode(ay.b_sum)));
  }
}

TEST_CASE("order_probe") {
  auto s = ge();
  auto r = order_probe(w(s, "a"), 100);
  CHECK(r.finite);
  CHECK(r.order == 2);
  CHECK_FALSE(order_probe(w(s, "a b"), 1024).finite);
  auto ad = order_probe(w(s, "a d"), 100);
  CHECK(ad.finite);
  CHECK(ad.order == 4);
  CHECK(order_probe(Element::identity(s), 1).order == 1);
  CHECK_FALSE(order_probe(w(s, "a d"), 3).finite);
  auto g = grig();
  auto ab1 = order_probe(w(g, "a b1"), 64);
  CHECK(ab1.finite);
  CHECK(ab1.order == 16);
}

TEST_CASE("b_length counts B-letters of the stored word") {
  auto s = ge();
  CHECK(b_length(Element::identity(s)) == 0);
  CHECK(b_length(w(s, "a b0 a b1 a")) == 2);
  CHECK(b_length(w(s, "(a d)^4")) == 4);
}

TEST_CASE("find_cd") {
  auto s = ge();
  auto cd = find_cd(*s);
  CHECK(cd.d == BVec{{1, 0}});
  CHECK(cd.c == BVec{{0, 1}});
  auto wc = wreath(Element::b(s, cd.c));
  CHECK(wc.sections[0] == w(s, "a"));
  CHECK(wc.sections[1] == Element::b(s, cd.d));
  auto g = grig();
  auto cdg = find_cd(*g);
  CHECK(cdg.d == BVec{{1, 0}});
  CHECK(cdg.c == BVec{{1, 1}});
  auto wg = wreath(Element::b(g, cdg.c));
  CHECK(wg.root == 0);
  CHECK(wg.sections[0] == w(g, "a"));
  CHECK(wg.sections[1] == Element::b(g, cdg.d));
  CHECK_THROWS_AS(find_cd(*testutil::dinf()), Error);
  // brute force over all F_2 polynomials of degree 2..5
  for (std::int64_t code = 1; code < 64; code += 2) {
    for (int m = 2; m <= 5; ++m) {
      if (code >= (1 << m)) continue;
      std::vector<std::int64_t> c;
      for (int i = 0; i < m; ++i) c.push_back((code >> i) & 1);
      auto sp = make_spec(2, c);
      auto r = find_cd(*sp);
      auto wr = wreath(Element::b(sp, r.c));
      CHECK(wr.sections[0] == Element::a(sp));
      CHECK(wr.sections[1] == Element::b(sp, r.d));
      CHECK_FALSE(subspace_Bi(*sp, 1).contains(r.d));
      CHECK(subspace_Bi(*sp, 0).contains(r.d));
    }
  }
}

TEST_CASE("phi_lift") {
  auto s = ge();
  CHECK(phi_lift(Element::identity(s)).empty());
  auto pa = phi_lift(w(s, "a"));
  CHECK(pa == w(s, "a c a"));
  CHECK(wreath(pa).sections[1] == w(s, "a"));
  CHECK(wreath(pa).sections[0] == w(s, "d"));
  CHECK(phi_lift(w(s, "b1")) == w(s, "b0"));
  CHECK(section_at(w(s, "b0"), {1}) == w(s, "b1"));
  CHECK_THROWS_AS(phi_lift(w(testutil::dinf(), "a")), Error);

  for (auto sp : {ge(), grig()}) {
    std::mt19937_64 rng(17);
    auto cd = find_cd(*sp);
    Letter d = sp->encode(cd.d);
    for (int t = 0; t < 200; ++t) {
      auto x = random_word(sp, rng, 30), y = random_word(sp, rng, 30);
      auto px = phi_lift(x);
      CHECK(px.root() == 0);
      CHECK(equal_in_group(phi_lift(x * y), px * phi_lift(y)));
      auto wx = wreath(px);
      CHECK(equal_in_group(wx.sections[1], x));
      for (Letter l : wx.sections[0].letters()) CHECK((is_a(l) || l == d));
    }
  }
}

TEST_CASE("theta") {
  auto s = ge();
  CHECK(theta(Element::identity(s)).empty());
  for (int l = 1; l <= 3; ++l) {
    auto z = w(s, "b a").pow(2 * l);
    CHECK(theta(z) == z);
    auto z2 = w(s, "a b").pow(2 * l);
    CHECK(theta(z2) == z2);
  }
  // psi([a, b1]) = (b0 a, a b0)
  auto t = theta(w(s, "[a, b1]"));
  CHECK(t == w(s, "a b0 a a a b0"));
  CHECK_THROWS_AS(theta(w(s, "a")), Error);
  CHECK_THROWS_AS(theta(w(testutil::fg(), "[a, b0]")), Error);
}

TEST_CASE("theta_stabilize") {
  auto s = ge();
  auto r0 = theta_stabilize(Element::identity(s), 64);
  CHECK(r0.cls == ThetaClass::Trivial);
  CHECK(r0.trace.empty());
  auto r1 = theta_stabilize(w(s, "b a").pow(4), 64);
  CHECK(r1.cls == ThetaClass::BaPower);
  CHECK(r1.l == 2);
  auto r2 = theta_stabilize(w(s, "a b0 a b0"), 64);
  CHECK(r2.cls == ThetaClass::LengthTwo);
  auto r3 = theta_stabilize(w(s, "a b0 a (b a)^4 b0"), 64);
  CHECK(r3.cls == ThetaClass::AxaBaX);
  CHECK(r3.l == 2);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    Element z = Element::identity(s);
    for (int k = 0; k < 4; ++k) {
      auto x = random_word(s, rng, 6), y = random_word(s, rng, 6), g = random_word(s, rng, 6);
      z = z * conjugate(commutator(x, y), g);
    }
    auto r = theta_stabilize(z, 64);
    CHECK(r.length_nonincreasing);
    CHECK(r.cls != ThetaClass::Unstabilized);
    std::size_t prev = b_length(z);
    for (auto& e : r.trace) {
      CHECK(b_length(e) <= prev);
      prev = b_length(e);
    }
  }
}

TEST_CASE("word parser") {
  auto s = ge();
  CHECK(w(s, "1").empty());
  CHECK(w(s, "").empty());
  CHECK(w(s, "B<1,1>") == w(s, "b"));
  CHECK(w(s, "b0^a") == w(s, "a b0 a"));
  CHECK(w(s, "(a b0)^-1") == w(s, "b0 a"));
  CHECK(w(s, "[a,b0]") == w(s, "a b0 a b0"));
  CHECK_THROWS_AS(w(s, "b7"), Error);
  CHECK_THROWS_AS(w(s, "(a"), Error);
  CHECK_THROWS_AS(w(s, "x"), Error);
  CHECK_THROWS_AS(w(grig(), "b"), Error);
  CHECK(format_word(w(s, "a b0 B<1,1>")) == "a b1");
  CHECK(format_word(w(s, "B<1,1>")) == "B<1,1>");
  auto f = testutil::fg();
  CHECK(w(f, "a^-1") == w(f, "a^2"));
}
