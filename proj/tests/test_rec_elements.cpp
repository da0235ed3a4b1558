#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "sunic/rec_system.hpp"

using namespace sunic;
using testutil::ge;

TEST_CASE("build_conjugator") {
  auto s = ge();
  auto g3 = build_conjugator(s, 3);
  REQUIRE(g3.equations().size() == 1);
  CHECK(g3.equations()[0].words[0] == parse_word(s, "b a"));
  CHECK(g3.equations()[0].words[1].empty());
  auto g5 = build_conjugator(s, 5);
  CHECK(g5.equations()[0].words[0] == parse_word(s, "(b a)^2"));
  CHECK_THROWS_AS(build_conjugator(s, 2), Error);
  CHECK_THROWS_AS(build_conjugator(testutil::grig(), 3), Error);
}

TEST_CASE("rec_act_on_vertex") {
  auto s = ge();
  auto g = build_conjugator(s, 3);
  CHECK(rec_act_on_vertex(g, {0}) == Vertex{0});
  CHECK(rec_act_on_vertex(g, {0, 0}) == Vertex{0, 1});
  CHECK(rec_act_on_vertex(g, {}).empty());
}

TEST_CASE("level permutation agrees with vertex unfolding") {
  auto s = ge();
  for (int q : {3, 5, 7}) {
    auto g = build_conjugator(s, q);
    for (int n = 1; n <= 8; ++n) {
      auto lp = rec_level_perm(g, n).perm;
      for (std::uint32_t i = 0; i < lp.size(); ++i)
        CHECK(lp[i] == vertex_index(*s, rec_act_on_vertex(g, index_vertex(*s, n, i))));
    }
  }
}

TEST_CASE("an element written as a system acts like the element") {
  // b1 = (a, b0), b0 = (1, b1) as a two-symbol system
  auto s = ge();
  auto a = Element::a(s), id = Element::identity(s);
  RecSystem r(s, {{"B0", 0, {id, id}, {2, 1}}, {"B1", 0, {a, id}, {2, 0}}, {"E", 0, {id, id}, {2, 2}}}, 1);
  for (int n = 1; n <= 9; ++n) CHECK(rec_level_perm(r, n).perm == level_perm(parse_word(s, "b1"), n).images);
}

TEST_CASE("conjugator identities") {
  auto s = ge();
  for (int q : {3, 5}) {
    auto g = build_conjugator(s, q);
    auto ab = parse_word(s, "a b");
    CHECK(conjugation_check(g, ab.pow(q) * parse_word(s, "b"), parse_word(s, "a"), 10));
    CHECK(conjugation_check(g, parse_word(s, "b0"), parse_word(s, "b0"), 10));
    CHECK(conjugation_check(g, parse_word(s, "b1"), parse_word(s, "b1"), 10));
  }
  auto g3 = build_conjugator(s, 3);
  CHECK_FALSE(conjugation_check(g3, parse_word(s, "a"), parse_word(s, "a"), 12));
}

TEST_CASE("conjugation_check is monotone in depth") {
  auto s = ge();
  auto g = build_conjugator(s, 3);
  auto x = parse_word(s, "a b0"), y = parse_word(s, "b0 a");
  bool prev = true;
  for (int d = 1; d <= 8; ++d) {
    bool now = conjugation_check(g, x, y, d);
    if (!prev) CHECK_FALSE(now);
    prev = now;
  }
}

TEST_CASE("state counts stay bounded") {
  auto s = ge();
  for (int q = 3; q <= 9; q += 2) {
    auto res = rec_level_perm(build_conjugator(s, q), 12);
    for (auto c : res.states_per_level) CHECK(c <= static_cast<std::size_t>(q + 1));
  }
}
