#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sunic/element.hpp"

namespace sunic {

/// Eventually periodic ray u v v v ... Always kept canonical: v primitive,
/// u as short as possible.
class Ray {
 public:
  Ray() : per_{0} {}
  Ray(Vertex pre, Vertex per);

  const Vertex& preperiod() const { return pre_; }
  const Vertex& period() const { return per_; }
  Fp digit(std::size_t i) const;
  /// First k digits.
  Vertex prefix(std::size_t k) const;

  friend bool operator==(const Ray&, const Ray&) = default;
  friend auto operator<=>(const Ray&, const Ray&) = default;

 private:
  void canonicalize();
  Vertex pre_, per_;
};

/// "u(v)", e.g. "0(1)" for 0 1 1 1 ...
std::string format_ray(const Ray& r);
Ray parse_ray(const GroupSpec& spec, std::string_view text);

bool ray_equal(const Ray& r1, const Ray& r2);

/// x . r under the left action (rightmost letter first).
Ray act_ray(const Element& x, const Ray& r);
Ray apply_letter(const GroupSpec& spec, Letter l, const Ray& r);

/// (p-1)^infinity
Ray constant_ray(const GroupSpec& spec);

struct SchreierEdge {
  std::size_t from = 0, to = 0;
  std::string label;
};

struct SchreierBall {
  Ray center;
  int radius = 0;
  std::vector<Ray> vertices;  // BFS order
  std::vector<int> distance;
  std::vector<SchreierEdge> edges;
  std::string to_dot() const;
};

/// BFS over {a} and B \ {0}. For p = 2 every generator is an involution and
/// each undirected edge is listed once (from <= to).
SchreierBall schreier_ball(const SpecPtr& spec, const Ray& center, int radius);

/// (ab)^n . 1~ with b the dihedral witness.
Ray zeta(const SpecPtr& spec, std::int64_t n);
/// Searches k = 0, 1, -1, 2, -2, ... up to bound.
std::int64_t zeta_inv(const SpecPtr& spec, const Ray& r, std::int64_t bound = 10000);
std::int64_t z_action(const Element& x, std::int64_t n, std::int64_t bound = 10000);

struct ProperReport {
  std::int64_t q = 0;
  bool passed = false;
  std::string verdict;  // PASS, or the reason it is not a certificate
  std::string witness;
  std::vector<std::int64_t> samples;
  std::size_t checks = 0;
};

/// Certificate that ab is not in H(q) = <(ab)^q, B>: (ab)^q shifts the
/// Z-orbit by q, each basis letter maps n to +-n, so H(q).0 lies in qZ,
/// while ab moves 0 to 1. Samples n in [-3q, 3q].
ProperReport hq_properness_certificate(const SpecPtr& spec, std::int64_t q);

}  // namespace sunic
