#pragma once

#include <random>
#include <string>

#include "sunic/core_algebra.hpp"
#include "sunic/element.hpp"
#include "sunic/word_syntax.hpp"

namespace testutil {

inline sunic::SpecPtr grig() { return sunic::make_spec(2, {1, 1}); }
inline sunic::SpecPtr ge() { return sunic::make_spec(2, {1, 0}); }
inline sunic::SpecPtr fg() { return sunic::make_spec(3, {-1}); }
inline sunic::SpecPtr dinf() { return sunic::make_spec(2, {1}); }

inline std::string data(const std::string& name) { return std::string(SUNIC_DATA_DIR) + "/" + name; }

// Random word with up to max_len letters drawn from {a^e} and B \ {0}.
inline sunic::Element random_word(const sunic::SpecPtr& s, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> aexp(1, s->p() - 1);
  std::uniform_int_distribution<std::uint32_t> bcode(1, s->b_order() - 1);
  std::bernoulli_distribution coin(0.5);
  int n = len(rng);
  std::vector<sunic::Letter> w;
  for (int i = 0; i < n; ++i) w.push_back(coin(rng) ? sunic::a_letter(aexp(rng)) : bcode(rng));
  return sunic::Element(s, w);
}

// Level-n action as a vector of images, by brute force over vertices.
inline std::vector<sunic::Vertex> all_vertices(sunic::Fp p, int n) {
  std::vector<sunic::Vertex> out;
  sunic::Vertex v(n, 0);
  for (;;) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == p - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

}  // namespace testutil
