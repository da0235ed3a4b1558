#include "sunic/perm_chain.hpp"

#include <algorithm>
#include <sstream>

#include "sunic/word_syntax.hpp"

namespace sunic {

namespace {

Fp inv_mod_p(Fp x, Fp p) {
  for (Fp y = 1; y < p; ++y)
    if ((std::uint64_t(x) * y) % p == 1) return y;
  throw Error(ErrorKind::InternalConsistency, "no inverse mod p");
}

std::uint32_t ipow(std::uint32_t p, int e) {
  std::uint32_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

std::uint32_t vertex_image(const Perm& g, std::uint32_t p, int n, TreeVertex v) {
  std::uint32_t stride = ipow(p, n - v.level);
  return g[v.index * stride] / stride;
}

bool in_iterated_wreath(const Perm& g, std::uint32_t p, int n) {
  const std::uint32_t N = ipow(p, n);
  if (g.size() != N) return false;
  std::vector<char> seen(N, 0);
  for (std::uint32_t x : g) {
    if (x >= N || seen[x]) return false;
    seen[x] = 1;
  }
  // images of vertices at each level, read off the first leaf below them
  std::vector<std::vector<std::uint32_t>> img(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::uint32_t stride = ipow(p, n - k), cnt = ipow(p, k);
    img[k].resize(cnt);
    for (std::uint32_t u = 0; u < cnt; ++u) img[k][u] = g[u * stride] / stride;
    for (std::uint32_t i = 0; i < N; ++i)
      if (g[i] / stride != img[k][i / stride]) return false;
  }
  for (int k = 0; k < n; ++k)
    for (std::uint32_t u = 0; u < ipow(p, k); ++u) {
      std::uint32_t base = img[k][u] * p;
      std::uint32_t r = (img[k + 1][u * p] + p - base % p) % p;
      if (img[k + 1][u * p] / p != img[k][u]) return false;
      for (std::uint32_t x = 0; x < p; ++x)
        if (img[k + 1][u * p + x] != base + (x + r) % p) return false;
    }
  return true;
}

// ---------------------------------------------------------------- PermChain

PermChain::PermChain(SpecPtr spec, int n)
    : spec_(std::move(spec)), n_(n), p_(spec_->p()), size_(level_size(*spec_, n)), layers_(n) {
  for (int k = 0; k <= n; ++k) stride_.push_back(ipow(p_, n - k));
}

BigInt PermChain::order() const {
  BigInt r = 1;
  for (std::size_t i = 0; i < log_order_; ++i) r *= p_;
  return r;
}

std::vector<Fp> PermChain::labels_at(const Perm& h, int k) const {
  std::uint32_t cnt = ipow(p_, k);
  std::vector<Fp> L(cnt);
  const std::uint32_t s = stride_[k], c = stride_[k + 1];
  for (std::uint32_t i = 0; i < cnt; ++i) L[i] = (h[i * s] / c) % p_;
  return L;
}

int PermChain::sift(Perm& h, std::vector<Fp>& labels) const {
  for (int k = 0; k < n_; ++k) {
    std::vector<Fp> L = labels_at(h, k);
    for (std::size_t id : layers_[k]) {
      const Elt& e = *elts_[id];
      Fp c = static_cast<Fp>(std::uint64_t(L[e.pivot]) * inv_mod_p(e.labels[e.pivot], p_) % p_);
      if (!c) continue;
      for (Fp t = 0; t < c; ++t) h = perm_compose(e.ginv, h);
      for (std::size_t i = e.pivot; i < L.size(); ++i)
        L[i] = static_cast<Fp>((L[i] + std::uint64_t(p_ - c) * e.labels[i]) % p_);
    }
    if (std::any_of(L.begin(), L.end(), [](Fp x) { return x != 0; })) {
      labels = std::move(L);
      return k;
    }
  }
  return -1;
}

void PermChain::insert_residue(Perm h, int layer, std::vector<Fp> labels) {
  auto e = std::make_unique<Elt>();
  e->pivot = static_cast<std::uint32_t>(
      std::find_if(labels.begin(), labels.end(), [](Fp x) { return x != 0; }) - labels.begin());
  e->ginv = perm_inverse(h);
  e->g = std::move(h);
  e->labels = std::move(labels);
  std::size_t id = elts_.size();
  elts_.push_back(std::move(e));
  auto& lay = layers_[layer];
  auto pos = std::lower_bound(lay.begin(), lay.end(), elts_[id]->pivot,
                              [&](std::size_t a, std::uint32_t piv) { return elts_[a]->pivot < piv; });
  lay.insert(pos, id);
  ++log_order_;
  pc_queue_.push_back(Task{Task::Power, id, 0, {}});
  for (std::size_t j = 0; j < id; ++j) pc_queue_.push_back(Task{Task::Comm, id, j, {}});
}

void PermChain::record_generator(const Perm& g) {
  gens_.push_back(g);
  for (std::size_t j = 0; j < ambient_.size(); ++j)
    conj_queue_.push_back(Task{Task::Conj, gens_.size() - 1, j, {}});
}

void PermChain::run() {
  std::vector<Fp> labels;
  while (!pc_queue_.empty() || !conj_queue_.empty()) {
    if (reached_bound()) {
      pc_queue_.clear();
      conj_queue_.clear();
      return;
    }
    if (!pc_queue_.empty()) {
      Task t = std::move(pc_queue_.front());
      pc_queue_.pop_front();
      Perm h;
      switch (t.kind) {
        case Task::Raw:
          h = std::move(t.raw);
          break;
        case Task::Power: {
          const Perm& g = elts_[t.i]->g;
          h = g;
          for (Fp k = 1; k < p_; ++k) h = perm_compose(g, h);
          break;
        }
        case Task::Comm: {
          const Elt& x = *elts_[t.i];
          const Elt& y = *elts_[t.j];
          h = perm_compose(x.ginv, perm_compose(y.ginv, perm_compose(x.g, y.g)));
          break;
        }
        case Task::Conj:
          break;
      }
      if (perm_is_identity(h)) continue;
      int layer = sift(h, labels);
      if (layer >= 0) insert_residue(std::move(h), layer, std::move(labels));
      continue;
    }
    Task t = conj_queue_.front();
    conj_queue_.pop_front();
    const Perm& x = ambient_[t.j];
    Perm c = perm_compose(perm_inverse(x), perm_compose(gens_[t.i], x));
    Perm probe = c;
    if (sift(probe, labels) < 0) continue;
    record_generator(c);
    pc_queue_.push_back(Task{Task::Raw, 0, 0, std::move(c)});
  }
}

bool PermChain::contains(const Perm& g) const {
  if (!in_iterated_wreath(g, p_, n_)) return false;
  Perm h = g;
  std::vector<Fp> labels;
  return sift(h, labels) < 0;
}

bool PermChain::member(const LevelPerm& g) const {
  if (g.n != n_) throw Error(ErrorKind::LevelMismatch, "permutation level differs from chain level");
  return contains(g.images);
}

bool PermChain::add_generator(const Perm& g) {
  if (g.size() != size_) throw Error(ErrorKind::LevelMismatch, "permutation level differs from chain level");
  if (!in_iterated_wreath(g, p_, n_))
    throw Error(ErrorKind::InvalidArgument, "permutation is not a tree automorphism of the right kind");
  Perm h = g;
  std::vector<Fp> labels;
  if (sift(h, labels) < 0) return false;
  std::size_t before = log_order_;
  record_generator(g);
  pc_queue_.push_back(Task{Task::Raw, 0, 0, g});
  run();
  return log_order_ > before;
}

void PermChain::close_under_conjugation(const std::vector<Perm>& ambient) {
  std::size_t first = ambient_.size();
  ambient_.insert(ambient_.end(), ambient.begin(), ambient.end());
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = first; j < ambient_.size(); ++j) conj_queue_.push_back(Task{Task::Conj, i, j, {}});
  run();
}

std::vector<Perm> PermChain::strong_generators() const { return level_stabilizer_generators(0); }

std::vector<Perm> PermChain::level_stabilizer_generators(int k) const {
  std::vector<Perm> r;
  for (int l = std::max(0, k); l < n_; ++l)
    for (std::size_t id : layers_[l]) r.push_back(elts_[id]->g);
  return r;
}

std::vector<std::size_t> PermChain::layer_dims() const {
  std::vector<std::size_t> d;
  for (const auto& l : layers_) d.push_back(l.size());
  return d;
}

std::vector<TreeVertex> PermChain::base() const {
  std::vector<TreeVertex> b;
  for (int k = 0; k < n_; ++k)
    for (std::size_t id : layers_[k]) b.push_back({k + 1, elts_[id]->pivot * p_});
  return b;
}

std::string PermChain::summary_records(const std::string& name) const {
  std::ostringstream os;
  auto dims = layer_dims();
  for (int k = 0; k < n_; ++k)
    os << "record=chain_layer chain=" << name << " level=" << n_ << " layer=" << k
       << " dim=" << dims[k] << '\n';
  os << "record=chain chain=" << name << " level=" << n_ << " order=" << order()
     << " log_order=" << log_order_ << " strong_generators=" << elts_.size()
     << " generators=" << gens_.size() << " base=";
  bool first = true;
  for (auto v : base()) {
    if (!first) os << ',';
    first = false;
    os << format_vertex(index_vertex(*spec_, v.level, v.index));
  }
  if (first) os << '-';
  os << '\n';
  return os.str();
}

// -------------------------------------------------------------- VertexChain

VertexChain::VertexChain(SpecPtr spec, int n, std::vector<TreeVertex> base)
    : spec_(std::move(spec)), n_(n), size_(level_size(*spec_, n)) {
  std::vector<char> leaf(size_, 0);
  for (auto v : base) {
    if (v.level < 0 || v.level > n || v.index >= ipow(spec_->p(), v.level))
      throw Error(ErrorKind::InvalidArgument, "base vertex out of range");
    if (v.level == n) leaf[v.index] = 1;
    Level l;
    l.point = v;
    l.orbit = {v.index};
    l.u = {perm_identity(size_)};
    l.uinv = {perm_identity(size_)};
    l.processed = {0};
    levels_.push_back(std::move(l));
  }
  if (std::find(leaf.begin(), leaf.end(), 0) != leaf.end())
    throw Error(ErrorKind::InvalidArgument, "base must contain every leaf");
}

std::uint32_t VertexChain::image(const Perm& g, std::size_t lvl, std::uint32_t pt) const {
  return vertex_image(g, spec_->p(), n_, {levels_[lvl].point.level, pt});
}

int VertexChain::orbit_pos(std::size_t lvl, std::uint32_t pt) const {
  const auto& o = levels_[lvl].orbit;
  auto it = std::find(o.begin(), o.end(), pt);
  return it == o.end() ? -1 : static_cast<int>(it - o.begin());
}

void VertexChain::extend_orbit(std::size_t lvl) {
  Level& L = levels_[lvl];
  for (std::size_t idx = 0; idx < L.orbit.size(); ++idx)
    for (std::size_t s = 0; s < strong_.size(); ++s) {
      if (depth_[s] < lvl) continue;
      std::uint32_t img = image(strong_[s], lvl, L.orbit[idx]);
      if (orbit_pos(lvl, img) >= 0) continue;
      L.orbit.push_back(img);
      Perm u = perm_compose(strong_[s], L.u[idx]);
      L.uinv.push_back(perm_inverse(u));
      L.u.push_back(std::move(u));
      L.processed.push_back(0);
    }
}

std::size_t VertexChain::sift(Perm& h, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    int pos = orbit_pos(j, image(h, j, levels_[j].point.index));
    if (pos < 0) return j;
    if (pos > 0) h = perm_compose(levels_[j].uinv[pos], h);
  }
  if (!perm_is_identity(h)) throw Error(ErrorKind::InternalConsistency, "sift left a residue");
  return levels_.size();
}

void VertexChain::add_generators(const std::vector<Perm>& gens) {
  for (const auto& g : gens) {
    Perm h = g;
    std::size_t j = sift(h, 0);
    if (j == levels_.size()) continue;
    strong_.push_back(std::move(h));
    depth_.push_back(j);
    for (std::size_t l = 0; l <= j; ++l) extend_orbit(l);
  }
  schreier_sims();
}

void VertexChain::schreier_sims() {
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    Level& L = levels_[i];
    bool added = false;
    for (std::size_t pos = 0; pos < L.orbit.size() && !added; ++pos) {
      while (L.processed[pos] < strong_.size()) {
        std::size_t s = L.processed[pos]++;
        if (depth_[s] < static_cast<std::size_t>(i)) continue;
        if (pos == 0 && depth_[s] > static_cast<std::size_t>(i)) continue;
        const Perm& g = strong_[s];
        int q = orbit_pos(i, image(g, i, L.orbit[pos]));
        Perm h = perm_compose(L.uinv[q], perm_compose(g, L.u[pos]));
        if (perm_is_identity(h)) continue;
        std::size_t j = sift(h, i + 1);
        if (j == levels_.size()) continue;
        strong_.push_back(std::move(h));
        depth_.push_back(j);
        for (std::size_t l = i + 1; l <= j; ++l) extend_orbit(l);
        i = static_cast<long>(j);
        added = true;
        break;
      }
    }
    if (!added) --i;
  }
}

BigInt VertexChain::order() const {
  BigInt r = 1;
  for (const auto& l : levels_) r *= static_cast<unsigned>(l.orbit.size());
  return r;
}

bool VertexChain::contains(const Perm& g) const {
  if (g.size() != size_) return false;
  Perm h = g;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    int pos = orbit_pos(j, image(h, j, levels_[j].point.index));
    if (pos < 0) return false;
    if (pos > 0) h = perm_compose(levels_[j].uinv[pos], h);
  }
  return perm_is_identity(h);
}

std::vector<Perm> VertexChain::stabilizer_generators(std::size_t j) const {
  std::vector<Perm> r;
  for (std::size_t s = 0; s < strong_.size(); ++s)
    if (depth_[s] >= j) r.push_back(strong_[s]);
  return r;
}

}  // namespace sunic
