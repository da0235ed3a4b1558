#include "sunic/perm.hpp"

#include <algorithm>
#include <thread>

namespace sunic {

Perm perm_identity(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

Perm perm_compose(const Perm& g, const Perm& h) {
  Perm r(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[h[i]];
  return r;
}

Perm perm_inverse(const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[g[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool perm_is_identity(const Perm& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != i) return false;
  return true;
}

std::uint32_t level_size(const GroupSpec& spec, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative level");
  std::uint64_t s = 1;
  for (int i = 0; i < n; ++i) {
    s *= spec.p();
    if (s > kMaxBOrder) throw Error(ErrorKind::LevelTooLarge, "p^n exceeds 2^20");
  }
  return static_cast<std::uint32_t>(s);
}

std::uint32_t vertex_index(const GroupSpec& spec, const Vertex& v) {
  std::uint32_t idx = 0;
  for (Fp d : v) idx = idx * spec.p() + d;
  return idx;
}

Vertex index_vertex(const GroupSpec& spec, int n, std::uint32_t idx) {
  Vertex v(n);
  for (int i = n - 1; i >= 0; --i) {
    v[i] = idx % spec.p();
    idx /= spec.p();
  }
  return v;
}

LevelEvaluator::LevelEvaluator(SpecPtr spec, int n, int jobs)
    : spec_(std::move(spec)), n_(n), size_(level_size(*spec_, n)), jobs_(std::max(1, jobs)) {}

const Perm& LevelEvaluator::letter_perm(Letter l) const {
  std::lock_guard lk(mu_);
  auto it = cache_.find(l);
  if (it != cache_.end()) return *it->second;
  auto p = std::make_unique<Perm>(size_);
  for (std::uint32_t i = 0; i < size_; ++i) {
    Vertex v = index_vertex(*spec_, n_, i);
    apply_letter(*spec_, l, v);
    (*p)[i] = vertex_index(*spec_, v);
  }
  return *cache_.emplace(l, std::move(p)).first->second;
}

Perm LevelEvaluator::eval(const Element& x) const {
  std::vector<const Perm*> ps;
  for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it)
    ps.push_back(&letter_perm(*it));
  Perm out(size_);
  auto work = [&](std::uint32_t lo, std::uint32_t hi) {
    for (std::uint32_t v = lo; v < hi; ++v) {
      std::uint32_t img = v;
      for (const Perm* p : ps) img = (*p)[img];
      out[v] = img;
    }
  };
  if (jobs_ == 1 || size_ < 4096) {
    work(0, size_);
  } else {
    std::vector<std::thread> ts;
    std::uint32_t chunk = (size_ + jobs_ - 1) / jobs_;
    for (int j = 0; j < jobs_; ++j) {
      std::uint32_t lo = std::min(size_, j * chunk), hi = std::min(size_, lo + chunk);
      ts.emplace_back(work, lo, hi);
    }
    for (auto& t : ts) t.join();
  }
  return out;
}

LevelPerm level_perm(const Element& x, int n) {
  LevelEvaluator ev(x.spec(), n);
  return LevelPerm{n, ev.eval(x)};
}

}  // namespace sunic
