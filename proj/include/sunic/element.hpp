#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sunic/core_algebra.hpp"

namespace sunic {

/// One letter of a reduced word. The top bit marks an a-power (exponent in
/// the low bits); otherwise the value is a nonzero B-code.
using Letter = std::uint32_t;
inline constexpr Letter kAFlag = 0x80000000u;
inline bool is_a(Letter l) { return (l & kAFlag) != 0; }
inline Letter a_letter(Fp e) { return kAFlag | e; }
inline Fp a_exp(Letter l) { return l & ~kAFlag; }

/// A vertex of the tree (or a finite prefix of a ray): digits in 0..p-1.
using Vertex = std::vector<Fp>;

/// Group element as a freely reduced alternating word over {a^e} and B \ {0}.
class Element {
 public:
  explicit Element(SpecPtr spec) : spec_(std::move(spec)) {}
  Element(SpecPtr spec, std::vector<Letter> letters);

  static Element identity(const SpecPtr& spec) { return Element(spec); }
  static Element a(const SpecPtr& spec, std::int64_t e = 1);
  static Element b(const SpecPtr& spec, std::uint32_t code);
  static Element b(const SpecPtr& spec, const BVec& v);
  static Element basis(const SpecPtr& spec, std::size_t i);

  const SpecPtr& spec() const { return spec_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends a letter, merging with the tail.
  void push(Letter l);

  Element inverse() const;
  Element pow(std::int64_t k) const;

  /// Root exponent: sum of a-exponents mod p.
  Fp root() const;

  friend bool operator==(const Element& x, const Element& y) {
    return x.letters_ == y.letters_ && x.spec_->same_group(*y.spec_);
  }

 private:
  SpecPtr spec_;
  std::vector<Letter> letters_;
};

Element multiply(const Element& x, const Element& y);
inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }
Element conjugate(const Element& x, const Element& y);  // y^{-1} x y
Element commutator(const Element& x, const Element& y);  // x^{-1} y^{-1} x y

struct WreathForm {
  Fp root = 0;
  std::vector<Element> sections;
};

WreathForm wreath(const Element& x);
Element section_at(const Element& x, const Vertex& v);
Vertex act_on_vertex(const Element& x, const Vertex& v);

/// Image of a vertex under a single letter.
void apply_letter(const GroupSpec& spec, Letter l, Vertex& v);

/// Decides x == 1 in G by recursing through sections (memoized per spec).
bool is_trivial(const Element& x);
/// x == y as group elements.
bool equal_in_group(const Element& x, const Element& y);

struct AbelImage {
  Fp a_exp = 0;
  BVec b_sum;
  friend bool operator==(const AbelImage&, const AbelImage&) = default;
};
AbelImage abelianize(const Element& x);
bool in_derived_subgroup(const Element& x);

struct OrderResult {
  bool finite = false;
  std::uint64_t order = 0;  // valid when finite
};
/// Finite orders in G are powers of p, so x^(p^j) is tested for p^j <= bound.
OrderResult order_probe(const Element& x, std::uint64_t bound);

std::size_t b_length(const Element& x);

// Theta map and friends (p = 2).
Element theta(const Element& z);

enum class ThetaClass { Trivial, LengthTwo, AxaBaX, BaPower, Unstabilized };
std::string_view to_string(ThetaClass c);

struct ThetaResult {
  std::vector<Element> trace;
  ThetaClass cls = ThetaClass::Unstabilized;
  std::int64_t l = 0;  // the exponent l for AxaBaX / BaPower
  bool length_nonincreasing = true;
};
ThetaResult theta_stabilize(const Element& z, int max_iter);
ThetaClass theta_classify(const Element& z, std::int64_t* l = nullptr);

struct CD {
  BVec c;
  BVec d;
};
/// d = smallest element of B_0 \ B_1, c with psi(c) = (a, d).
CD find_cd(const GroupSpec& spec);

/// phi(a) = a c a, phi(x) = rho^{-1}(x).
Element phi_lift(const Element& x);

/// The dihedral witness as an Element; throws NoDihedralWitness.
Element witness_element(const SpecPtr& spec);

namespace detail {
std::size_t triviality_cache_size(const GroupSpec& spec);
}

}  // namespace sunic
