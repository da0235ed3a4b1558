#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sunic/error.hpp"

namespace sunic {

using Fp = std::uint32_t;

namespace detail {
struct TrivialityCache;
}

/// A vector of B = F_p^m in the basis b_0, ..., b_{m-1}.
struct BVec {
  std::vector<Fp> coords;

  bool is_zero() const;
  friend bool operator==(const BVec&, const BVec&) = default;
  // Lexicographic on (c_0, c_1, ...).
  friend auto operator<=>(const BVec& x, const BVec& y) {
    return x.coords <=> y.coords;
  }
};

std::ostream& operator<<(std::ostream& os, const BVec& v);

using Matrix = std::vector<std::vector<Fp>>;

/// Row-reduced echelon basis of a subspace of F_p^m.
class Subspace {
 public:
  Subspace(Fp p, std::size_t m, std::vector<std::vector<Fp>> spanning);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Fp>>& basis() const { return basis_; }
  bool contains(const BVec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Fp p_;
  std::size_t m_;
  std::vector<std::vector<Fp>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Immutable definition of G_{p,f}: tree arity p and the coefficients
/// a_0..a_{m-1} of the monic polynomial f. B-vectors are also handled as
/// packed integer codes sum c_i p^i in [0, p^m); the rho / omega tables
/// are indexed by these codes.
class GroupSpec {
 public:
  Fp p() const { return p_; }
  std::size_t m() const { return coeffs_.size(); }
  const std::vector<Fp>& coeffs() const { return coeffs_; }
  const Matrix& rho_matrix() const { return rho_matrix_; }
  std::vector<Fp> omega_row() const;

  /// p^m, the order of B.
  std::uint32_t b_order() const { return b_order_; }
  /// (p, m) = (2, 1): the infinite dihedral group.
  bool degenerate() const { return p_ == 2 && coeffs_.size() == 1; }

  std::uint32_t encode(const BVec& v) const;
  BVec decode(std::uint32_t code) const;
  std::uint32_t basis_code(std::size_t i) const;

  std::uint32_t rho(std::uint32_t code) const { return rho_[code]; }
  std::uint32_t rho_inv(std::uint32_t code) const { return rho_inv_[code]; }
  std::uint32_t rho_pow(std::uint32_t code, long k) const;
  Fp omega(std::uint32_t code) const { return omega_[code]; }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;

  /// Polynomial as text, e.g. "x^2+x+1".
  std::string polynomial_string() const;

  bool same_group(const GroupSpec& other) const {
    return p_ == other.p_ && coeffs_ == other.coeffs_;
  }

  detail::TrivialityCache& triviality_cache() const { return *cache_; }

  friend std::shared_ptr<const GroupSpec> make_spec(
      std::int64_t p, const std::vector<std::int64_t>& coeffs);

 private:
  GroupSpec() = default;

  Fp p_ = 0;
  std::vector<Fp> coeffs_;
  Matrix rho_matrix_;
  std::uint32_t b_order_ = 0;
  std::vector<std::uint32_t> rho_;
  std::vector<std::uint32_t> rho_inv_;
  std::vector<Fp> omega_;
  std::shared_ptr<detail::TrivialityCache> cache_;
};

using SpecPtr = std::shared_ptr<const GroupSpec>;

/// Largest p^m accepted; orbit enumeration walks all of B.
inline constexpr std::uint32_t kMaxBOrder = 1u << 20;

bool is_prime(std::int64_t n);

/// Builds and validates G_{p,f} for f = x^m + a_{m-1}x^{m-1} + ... + a_0.
/// Coefficients are reduced mod p (negative values allowed).
SpecPtr make_spec(std::int64_t p, const std::vector<std::int64_t>& coeffs);

BVec rho_apply(const GroupSpec& spec, const BVec& v);
Fp omega_apply(const GroupSpec& spec, const BVec& v);

/// B_i = rho^i(ker omega); i may be negative.
Subspace subspace_Bi(const GroupSpec& spec, long i);

/// Multiplicative order of rho.
std::uint64_t rho_order(const GroupSpec& spec);

/// No non-trivial rho-orbit lies inside ker omega (checked by orbit walk).
bool orbit_faithful(const GroupSpec& spec);

/// Torsion via "every non-trivial rho-orbit meets ker omega".
/// Throws DegenerateCase for (2, 1).
bool is_torsion(const GroupSpec& spec);

/// Torsion via "B_0 u ... u B_{r-1} = B for some r"; independent route
/// used to cross-check is_torsion.
bool is_torsion_by_covering(const GroupSpec& spec);

/// For p = 2: the b with rho(b) = b and omega(b) = 1, if f(1) = 0.
std::optional<BVec> dihedral_witness(const GroupSpec& spec);

/// f(1) == 0 over F_p, i.e. (x - 1) divides f.
bool divisible_by_x_minus_one(const GroupSpec& spec);

/// Parses the line-oriented spec file format (`p = ...`, `f = a0,...`).
SpecPtr parse_spec_text(std::string_view text);
SpecPtr load_spec_file(const std::string& path);

}  // namespace sunic
