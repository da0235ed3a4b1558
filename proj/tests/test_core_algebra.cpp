#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"

using namespace sunic;
using testutil::ge;
using testutil::grig;

TEST_CASE("make_spec builds the companion matrix") {
  auto g = ge();
  CHECK(g->rho_matrix() == Matrix{{0, 1}, {1, 0}});
  auto gr = grig();
  CHECK(gr->rho_matrix() == Matrix{{0, 1}, {1, 1}});
  CHECK(g->omega_row() == std::vector<Fp>{0, 1});
  // negative coefficients reduce mod p
  auto f = testutil::fg();
  CHECK(f->coeffs() == std::vector<Fp>{2});
  CHECK(f->rho_matrix() == Matrix{{1}});
}

TEST_CASE("make_spec errors") {
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind([] { make_spec(2, {0, 1}); }) == ErrorKind::NonInvertiblePolynomial);
  CHECK(kind([] { make_spec(4, {1}); }) == ErrorKind::NonPrimeP);
  CHECK(kind([] { make_spec(2, {}); }) == ErrorKind::EmptyPolynomial);
  CHECK(kind([] { make_spec(2, std::vector<std::int64_t>(21, 1)); }) == ErrorKind::SpecTooLarge);
  CHECK_NOTHROW(make_spec(2, std::vector<std::int64_t>(20, 1)));
}

TEST_CASE("rho and omega on the reference groups") {
  auto g = ge();
  CHECK(rho_apply(*g, BVec{{1, 0}}) == BVec{{0, 1}});
  CHECK(rho_apply(*g, BVec{{0, 0}}) == BVec{{0, 0}});
  CHECK(rho_apply(*grig(), BVec{{0, 1}}) == BVec{{1, 1}});
  CHECK(omega_apply(*g, BVec{{1, 0}}) == 0);
  CHECK(omega_apply(*g, BVec{{0, 1}}) == 1);
  CHECK(omega_apply(*g, BVec{{0, 0}}) == 0);
}

TEST_CASE("subspaces B_i") {
  auto g = ge();
  CHECK(subspace_Bi(*g, 0).basis() == std::vector<std::vector<Fp>>{{1, 0}});
  CHECK(subspace_Bi(*g, 1).basis() == std::vector<std::vector<Fp>>{{0, 1}});
  for (auto s : {ge(), grig(), make_spec(3, {1, 2, 1}), make_spec(5, {2, 0, 1})}) {
    auto ord = static_cast<long>(rho_order(*s));
    for (long i = -4; i <= 4; ++i) {
      CHECK(subspace_Bi(*s, i).dim() == s->m() - 1);
      CHECK(subspace_Bi(*s, i) == subspace_Bi(*s, i + ord));
    }
  }
}

TEST_CASE("torsion classification") {
  CHECK(is_torsion(*grig()));
  CHECK_FALSE(is_torsion(*ge()));
  CHECK_FALSE(is_torsion(*testutil::fg()));
  CHECK_THROWS_AS(is_torsion(*testutil::dinf()), Error);
}

// Every polynomial with nonzero constant term for small p, m: the two
// torsion criteria agree and the orbit condition holds.
TEST_CASE("torsion criteria agree on all small specs") {
  for (std::int64_t p : {2, 3, 5}) {
    int max_m = p == 2 ? 6 : (p == 3 ? 3 : 2);
    for (int m = 1; m <= max_m; ++m) {
      std::int64_t count = 1;
      for (int i = 0; i < m; ++i) count *= p;
      for (std::int64_t code = 0; code < count; ++code) {
        std::vector<std::int64_t> c(m);
        std::int64_t t = code;
        for (int i = 0; i < m; ++i, t /= p) c[i] = t % p;
        if (c[0] == 0) continue;
        auto s = make_spec(p, c);
        CHECK(orbit_faithful(*s));
        if (s->degenerate()) continue;
        CHECK(is_torsion(*s) == is_torsion_by_covering(*s));
      }
    }
  }
}

TEST_CASE("rho is invertible and matches a direct matrix product") {
  auto s = make_spec(3, {1, 2, 0, 1});
  for (std::uint32_t v = 0; v < s->b_order(); ++v) {
    CHECK(s->rho_inv(s->rho(v)) == v);
    // column form: rho(e_i) = e_{i+1}, rho(e_{m-1}) = -sum a_i e_i
    BVec x = s->decode(v);
    std::vector<Fp> y(4, 0);
    for (int i = 0; i < 3; ++i) y[i + 1] = (y[i + 1] + x.coords[i]) % 3;
    for (int i = 0; i < 4; ++i) y[i] = (y[i] + (3 - s->coeffs()[i]) % 3 * x.coords[3]) % 3;
    CHECK(s->decode(s->rho(v)) == BVec{y});
  }
}

TEST_CASE("dihedral witness") {
  CHECK(dihedral_witness(*ge()) == BVec{{1, 1}});
  CHECK_FALSE(dihedral_witness(*grig()).has_value());
  CHECK(dihedral_witness(*testutil::dinf()) == BVec{{1}});
  CHECK_THROWS_AS(dihedral_witness(*testutil::fg()), Error);
  // present exactly when f(1) = 0
  for (std::int64_t code = 1; code < 64; code += 2) {
    std::vector<std::int64_t> c;
    for (int i = 0; i < 6; ++i) c.push_back((code >> i) & 1);
    auto s = make_spec(2, c);
    auto w = dihedral_witness(*s);
    CHECK(w.has_value() == divisible_by_x_minus_one(*s));
    if (w) {
      CHECK(rho_apply(*s, *w) == *w);
      CHECK(omega_apply(*s, *w) == 1);
    }
  }
}

TEST_CASE("spec file parsing") {
  auto s = parse_spec_text("# comment\n p = 2 \nf= 1 ,0  # trailing\n");
  CHECK(s->same_group(*ge()));
  auto f = load_spec_file(testutil::data("fg.spec"));
  CHECK(f->p() == 3);
  CHECK(f->coeffs() == std::vector<Fp>{2});
  CHECK_THROWS_AS(parse_spec_text("p = 2\n"), Error);
  CHECK_THROWS_AS(parse_spec_text("p = 2\nf = 1,x\n"), Error);
  CHECK_THROWS_AS(parse_spec_text("p = 2\nf = 1\nq = 3\n"), Error);
  CHECK_THROWS_AS(parse_spec_text("p = 2\nf = 1,\n"), Error);
}
