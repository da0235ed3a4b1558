#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "common.hpp"
#include "sunic/boundary.hpp"

using namespace sunic;
using testutil::ge;

namespace {

Ray R(const SpecPtr& s, const char* t) { return parse_ray(*s, t); }

Ray random_ray(const SpecPtr& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 5), plen(1, 3);
  std::uniform_int_distribution<Fp> dig(0, s->p() - 1);
  Vertex u(len(rng)), v(plen(rng));
  for (auto& x : u) x = dig(rng);
  for (auto& x : v) x = dig(rng);
  return Ray(u, v);
}

}  // namespace

TEST_CASE("canonical form") {
  auto s = ge();
  CHECK(ray_equal(Ray({1}, {1}), Ray({}, {1})));
  CHECK(ray_equal(Ray({}, {1, 0}), Ray({1}, {0, 1})));
  CHECK_FALSE(ray_equal(Ray({}, {1}), Ray({0}, {1})));
  CHECK(Ray({0, 1, 1}, {1, 1}) == Ray({0}, {1}));
  CHECK(Ray({}, {0, 1, 0, 1}).period() == Vertex{0, 1});
  CHECK(format_ray(Ray({0, 0}, {1})) == "00(1)");
  CHECK(R(s, "(1)") == constant_ray(*s));
  CHECK_THROWS_AS(R(s, "01"), Error);
  CHECK_THROWS_AS(R(s, "0()"), Error);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    Ray r = random_ray(s, rng);
    CHECK(parse_ray(*s, format_ray(r)) == r);
    // same sequence, longer representation
    std::size_t k = r.preperiod().size() + 3;
    Vertex per;
    for (std::size_t i = 0; i < 2 * r.period().size(); ++i) per.push_back(r.digit(k + i));
    CHECK(Ray(r.prefix(k), per) == r);
  }
}

TEST_CASE("action examples") {
  auto s = ge();
  auto b = witness_element(s);
  CHECK(act_ray(b, R(s, "(1)")) == R(s, "(1)"));
  CHECK(act_ray(b, R(s, "01(1)")) == R(s, "00(1)"));
  CHECK(act_ray(Element::a(s), R(s, "(1)")) == R(s, "0(1)"));
}

TEST_CASE("ray action agrees with vertex action on prefixes") {
  std::mt19937_64 rng(5);
  for (auto s : {ge(), testutil::grig(), testutil::fg(), make_spec(2, {1, 0, 1})}) {
    for (int t = 0; t < 300; ++t) {
      Element x = testutil::random_word(s, rng, 8);
      Ray r = random_ray(s, rng);
      Ray y = act_ray(x, r);
      for (std::size_t k : {1u, 5u, 17u, 30u}) CHECK(y.prefix(k) == act_on_vertex(x, r.prefix(k)));
    }
  }
}

TEST_CASE("composition") {
  std::mt19937_64 rng(9);
  auto s = ge();
  for (int t = 0; t < 500; ++t) {
    Element x = testutil::random_word(s, rng, 6), y = testutil::random_word(s, rng, 6);
    Ray r = random_ray(s, rng);
    CHECK(act_ray(x * y, r) == act_ray(x, act_ray(y, r)));
  }
}

TEST_CASE("fixed points") {
  auto s = ge();
  auto b = witness_element(s);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    Ray r = random_ray(s, rng);
    CHECK_FALSE(act_ray(Element::a(s), r) == r);
  }
  for (std::int64_t n = -40; n <= 40; ++n) {
    Ray r = zeta(s, n);
    CHECK((act_ray(b, r) == r) == (n == 0));
  }
}

TEST_CASE("schreier ball") {
  auto s = ge();
  auto one = constant_ray(*s);
  auto ball = schreier_ball(s, one, 3);
  REQUIRE(ball.vertices.size() == 4);
  CHECK(ball.vertices[1] == R(s, "0(1)"));
  CHECK(ball.vertices[2] == R(s, "00(1)"));
  CHECK(ball.vertices[3] == R(s, "10(1)"));
  auto b0 = schreier_ball(s, one, 0);
  CHECK(b0.vertices.size() == 1);
  CHECK_FALSE(b0.edges.empty());
  for (const auto& e : b0.edges) CHECK(e.from == e.to);
  CHECK(ball.to_dot().find("label=\"0(1)\"") != std::string::npos);
  CHECK(ball.to_dot().find("label=\"a\"") != std::string::npos);
  CHECK_THROWS_AS(schreier_ball(s, one, -1), Error);
}

TEST_CASE("orbit of 1~ is a half-line") {
  for (auto s : {ge(), make_spec(2, {1, 1, 1})}) {
    const int R_ = 50;
    auto ball = schreier_ball(s, constant_ray(*s), R_);
    CHECK(ball.vertices.size() == std::size_t(R_ + 1));
    const std::string bname = format_word(witness_element(s));
    // on the {a, b} edges: degree 2 with the loop counted once, and the
    // only loop sits at 1~. Other letters of B only add loops or repeat b.
    std::vector<std::set<std::size_t>> nb(ball.vertices.size()), all(ball.vertices.size());
    for (const auto& e : ball.edges) {
      all[e.from].insert(e.to);
      all[e.to].insert(e.from);
      if (e.label != "a" && e.label != bname) continue;
      nb[e.from].insert(e.to);
      nb[e.to].insert(e.from);
      if (e.from == e.to) CHECK(e.from == 0);
    }
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      if (ball.distance[i] < R_) CHECK(nb[i].size() == 2);
      all[i].erase(i);
      CHECK(all[i].size() <= 2);
    }
    // vertex i is at distance i; edge i -> i+1 is a for even i, b for odd i
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) CHECK(ball.distance[i] == int(i));
    for (const auto& e : ball.edges) {
      if (e.from == e.to) continue;
      CHECK(e.to == e.from + 1);
      if (e.label == "a") CHECK(e.from % 2 == 0);
      if (e.label == bname) CHECK(e.from % 2 == 1);
    }
  }
}

TEST_CASE("zeta") {
  auto s = ge();
  CHECK(zeta(s, 0) == constant_ray(*s));
  CHECK(zeta(s, 1) == R(s, "0(1)"));
  CHECK(zeta_inv(s, R(s, "(1)")) == 0);
  CHECK(zeta_inv(s, R(s, "0(1)")) == 1);
  CHECK(zeta_inv(s, zeta(s, 7)) == 7);
  auto ball = schreier_ball(s, constant_ray(*s), 101);
  std::set<Ray> seen;
  for (std::int64_t n = -50; n <= 50; ++n) {
    Ray r = zeta(s, n);
    CHECK(seen.insert(r).second);
    CHECK(zeta_inv(s, r) == n);
    int want = n > 0 ? int(2 * n - 1) : int(-2 * n);
    auto it = std::find(ball.vertices.begin(), ball.vertices.end(), r);
    REQUIRE(it != ball.vertices.end());
    CHECK(ball.distance[it - ball.vertices.begin()] == want);
  }
  CHECK_THROWS_AS(zeta_inv(s, R(s, "(0)"), 200), Error);
  CHECK_THROWS_AS(zeta(testutil::fg(), 1), Error);
}

TEST_CASE("z action") {
  auto s = ge();
  auto a = Element::a(s);
  auto b = witness_element(s);
  CHECK(z_action(a * b, 0) == 1);
  CHECK(z_action(b, 5) == -5);
  for (std::uint32_t c = 1; c < s->b_order(); ++c)
    for (std::int64_t n = -12; n <= 12; ++n) {
      auto y = z_action(Element::b(s, c), n);
      CHECK((y == n || y == -n));
    }
  for (std::int64_t n = -10; n <= 10; ++n) CHECK(z_action((a * b).pow(3), n) == n + 3);
}

TEST_CASE("properness certificate") {
  auto s = ge();
  for (std::int64_t q : {3, 5, 7}) {
    auto r = hq_properness_certificate(s, q);
    CHECK(r.passed);
    CHECK(r.verdict == "PASS");
    CHECK(r.samples.front() == -3 * q);
  }
  auto r1 = hq_properness_certificate(s, 1);
  CHECK_FALSE(r1.passed);
  CHECK(r1.verdict == "NotProper-by-this-certificate");
  CHECK_THROWS_AS(hq_properness_certificate(s, 4), Error);
  CHECK(hq_properness_certificate(make_spec(2, {1, 1, 1}), 3).passed);
  CHECK_THROWS_AS(hq_properness_certificate(testutil::grig(), 3), Error);
}
