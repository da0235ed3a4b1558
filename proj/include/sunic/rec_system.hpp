#pragma once

#include <map>
#include <string>
#include <vector>

#include "sunic/element.hpp"
#include "sunic/perm.hpp"

namespace sunic {

/// S = a^root (w_0 S_{j_0}, ..., w_{p-1} S_{j_{p-1}}): the section at x acts
/// as S_{j_x} followed by the word w_x.
struct RecEquation {
  std::string name;
  Fp root = 0;
  std::vector<Element> words;
  std::vector<std::size_t> next;
};

class RecSystem {
 public:
  RecSystem(SpecPtr spec, std::vector<RecEquation> eqs, std::size_t root_symbol = 0);

  const SpecPtr& spec() const { return spec_; }
  const std::vector<RecEquation>& equations() const { return eqs_; }
  std::size_t root_symbol() const { return root_; }

  std::string describe() const;

 private:
  SpecPtr spec_;
  std::vector<RecEquation> eqs_;
  std::size_t root_;
};

/// g with psi(g) = ((ba)^((q-1)/2) g, g).
RecSystem build_conjugator(const SpecPtr& spec, std::int64_t q);

Vertex rec_act_on_vertex(const RecSystem& r, const Vertex& v);

struct RecLevelResult {
  Perm perm;
  // distinct (residual word, symbol) states met at each depth below the root
  std::vector<std::size_t> states_per_level;
};

/// Permutation induced on level n, by memoized unfolding of states.
RecLevelResult rec_level_perm(const RecSystem& r, int n);

/// r^{-1} x r == y on level depth (and hence on all levels above it).
bool conjugation_check(const RecSystem& r, const Element& x, const Element& y, int depth);

}  // namespace sunic
