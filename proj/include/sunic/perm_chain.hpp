#pragma once

#include <deque>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sunic/perm.hpp"

namespace sunic {

using BigInt = boost::multiprecision::cpp_int;

/// Vertex of the tree as (level, lexicographic index).
struct TreeVertex {
  int level = 0;
  std::uint32_t index = 0;
  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

/// Image of a vertex under a leaf permutation of level n.
std::uint32_t vertex_image(const Perm& g, std::uint32_t p, int n, TreeVertex v);

/// True iff g (on the p^n leaves) preserves the tree and rotates the
/// children of every vertex cyclically, i.e. g lies in C_p wr ... wr C_p.
bool in_iterated_wreath(const Perm& g, std::uint32_t p, int n);

/// Stabilizer chain for a subgroup of the iterated wreath product of C_p
/// acting on level n. The base is the tree vertices in BFS order; every
/// fundamental orbit is the set of children of a vertex, so the chain
/// splits into layers St(k)/St(k+1), each an F_p-subspace of the rotation
/// labels at level k. Layer k keeps an echelon basis of such labels.
class PermChain {
 public:
  PermChain(SpecPtr spec, int n);

  const SpecPtr& spec() const { return spec_; }
  int level() const { return n_; }
  std::uint32_t degree() const { return size_; }

  BigInt order() const;
  /// order = p^log_order
  std::size_t log_order() const { return log_order_; }

  bool contains(const Perm& g) const;
  /// Throws LevelMismatch for the wrong level.
  bool member(const LevelPerm& g) const;

  /// Adds g and closes the chain. Returns true if the group grew.
  bool add_generator(const Perm& g);

  /// From now on the group is kept normal under conjugation by these.
  void close_under_conjugation(const std::vector<Perm>& ambient);

  /// Stop closing once the order reaches p^log_bound. The result is exact
  /// when the generated group is known to have at most that order.
  void set_order_bound(std::size_t log_bound) { bound_ = log_bound; }
  bool reached_bound() const { return bound_ && log_order_ >= bound_; }

  /// Generators that were not members when added (user and conjugation).
  const std::vector<Perm>& generators() const { return gens_; }
  std::vector<Perm> strong_generators() const;
  /// Strong generators of the level-k stabilizer.
  std::vector<Perm> level_stabilizer_generators(int k) const;
  /// log_p |St(k)/St(k+1)| for k = 0..n-1.
  std::vector<std::size_t> layer_dims() const;
  /// Base points with non-trivial fundamental orbit, in chain order.
  std::vector<TreeVertex> base() const;

  /// Line records: one per layer plus a summary.
  std::string summary_records(const std::string& name) const;

 private:
  struct Elt {
    Perm g, ginv;
    std::vector<Fp> labels;  // rotation labels at its layer
    std::uint32_t pivot = 0;
  };
  struct Task {
    enum Kind { Raw, Power, Comm, Conj } kind;
    std::size_t i = 0, j = 0;  // element ids, or generator / ambient index
    Perm raw;
  };

  std::vector<Fp> labels_at(const Perm& h, int k) const;
  // Sifts h. Returns -1 if h reduced to identity, else the layer where
  // it stopped; labels then holds the reduced labels there.
  int sift(Perm& h, std::vector<Fp>& labels) const;
  void insert_residue(Perm h, int layer, std::vector<Fp> labels);
  void record_generator(const Perm& g);
  void run();

  SpecPtr spec_;
  int n_;
  Fp p_;
  std::uint32_t size_;
  std::vector<std::uint32_t> stride_;  // leaves below a level-k vertex
  std::vector<std::unique_ptr<Elt>> elts_;
  std::vector<std::vector<std::size_t>> layers_;  // ids, sorted by pivot
  std::size_t log_order_ = 0;
  std::size_t bound_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> ambient_;
  std::deque<Task> pc_queue_;
  std::deque<Task> conj_queue_;
};

/// Deterministic Schreier-Sims over an explicit base of tree vertices, in
/// any order. Used for kernels of actions (points placed first in the base)
/// and as an independent check on PermChain.
class VertexChain {
 public:
  VertexChain(SpecPtr spec, int n, std::vector<TreeVertex> base);

  void add_generators(const std::vector<Perm>& gens);
  BigInt order() const;
  bool contains(const Perm& g) const;
  /// Generators of the pointwise stabilizer of base[0..j).
  std::vector<Perm> stabilizer_generators(std::size_t j) const;

 private:
  struct Level {
    TreeVertex point;
    std::vector<std::uint32_t> orbit;  // vertex indices at point.level
    std::vector<Perm> u, uinv;
    std::vector<std::size_t> processed;  // per orbit point: strong gens tried
  };

  std::uint32_t image(const Perm& g, std::size_t lvl, std::uint32_t pt) const;
  int orbit_pos(std::size_t lvl, std::uint32_t pt) const;
  void extend_orbit(std::size_t lvl);
  // returns base.size() if h sifts to the identity
  std::size_t sift(Perm& h, std::size_t from) const;
  void schreier_sims();

  SpecPtr spec_;
  int n_;
  std::uint32_t size_;
  std::vector<Level> levels_;
  std::vector<Perm> strong_;
  std::vector<std::size_t> depth_;  // first base index moved
};

}  // namespace sunic
