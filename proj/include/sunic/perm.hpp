#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "sunic/element.hpp"

namespace sunic {

/// Permutation of 0..N-1 as an image array; composition follows the left
/// action, (g*h)[v] = g[h[v]].
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t n);
Perm perm_compose(const Perm& g, const Perm& h);  // g after h
Perm perm_inverse(const Perm& g);
bool perm_is_identity(const Perm& g);

/// The permutation an element induces on level n. Vertices are indexed
/// lexicographically: x_1...x_n -> sum x_i p^(n-i).
struct LevelPerm {
  int n = 0;
  Perm images;
  friend bool operator==(const LevelPerm&, const LevelPerm&) = default;
};

/// Throws LevelTooLarge unless p^n <= 2^20; returns p^n.
std::uint32_t level_size(const GroupSpec& spec, int n);

std::uint32_t vertex_index(const GroupSpec& spec, const Vertex& v);
Vertex index_vertex(const GroupSpec& spec, int n, std::uint32_t idx);

/// Evaluates words on level n using cached per-letter permutations.
class LevelEvaluator {
 public:
  LevelEvaluator(SpecPtr spec, int n, int jobs = 1);

  const SpecPtr& spec() const { return spec_; }
  int level() const { return n_; }
  std::uint32_t size() const { return size_; }

  Perm eval(const Element& x) const;
  const Perm& letter_perm(Letter l) const;

 private:
  SpecPtr spec_;
  int n_;
  std::uint32_t size_;
  int jobs_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Letter, std::unique_ptr<Perm>> cache_;
};

LevelPerm level_perm(const Element& x, int n);

}  // namespace sunic
