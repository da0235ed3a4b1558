#include "sunic/quotients.hpp"

#include <map>
#include <mutex>

namespace sunic {

std::vector<Element> group_generators(const SpecPtr& spec) {
  std::vector<Element> g{Element::a(spec)};
  for (std::size_t i = 0; i < spec->m(); ++i) g.push_back(Element::basis(spec, i));
  return g;
}

SubgroupDesc whole_group(const SpecPtr& spec) { return {"G", group_generators(spec), false}; }

SubgroupDesc derived_subgroup_desc(const SpecPtr& spec) {
  auto g = group_generators(spec);
  SubgroupDesc d{"G'", {}, true};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) d.generators.push_back(commutator(g[i], g[j]));
  return d;
}

SubgroupDesc branch_kernel_desc(const SpecPtr& spec) {
  if (spec->p() != 2) throw Error(ErrorKind::WrongCharacteristic, "K is defined for p = 2");
  if (spec->m() < 2) throw Error(ErrorKind::DegenerateCase, "K needs m >= 2");
  SubgroupDesc d{"K", {}, true};
  auto a = Element::a(spec);
  // B_1 = rho(ker omega) is spanned by b_1..b_{m-1}
  for (std::size_t i = 0; i + 1 < spec->m(); ++i)
    d.generators.push_back(commutator(a, Element::b(spec, spec->rho(spec->basis_code(i)))));
  return d;
}

PermChain chain_from(const SpecPtr& spec, const SubgroupDesc& h, int n, const ChainOptions& opt) {
  LevelEvaluator ev(spec, n, opt.jobs);
  PermChain c(spec, n);
  if (opt.log_order_bound) c.set_order_bound(opt.log_order_bound);
  if (h.normal_closure) {
    std::vector<Perm> amb;
    for (const auto& g : group_generators(spec)) amb.push_back(ev.eval(g));
    c.close_under_conjugation(amb);
  }
  for (const auto& g : h.generators) {
    if (!g.spec()->same_group(*spec)) throw Error(ErrorKind::SpecMismatch, "generators differ in group");
    c.add_generator(ev.eval(g));
  }
  return c;
}

const PermChain& group_chain(const SpecPtr& spec, int n, int jobs) {
  static std::mutex mu;
  static std::map<std::tuple<Fp, std::vector<Fp>, int>, std::unique_ptr<PermChain>> cache;
  std::lock_guard lk(mu);
  auto key = std::make_tuple(spec->p(), spec->coeffs(), n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  ChainOptions opt;
  opt.jobs = jobs;
  auto c = std::make_unique<PermChain>(chain_from(spec, whole_group(spec), n, opt));
  return *cache.emplace(key, std::move(c)).first->second;
}

bool member(const PermChain& chain, const LevelPerm& g) { return chain.member(g); }

PermChain derived_chain(const SpecPtr& spec, const std::vector<Perm>& gens, int n, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "derivation depth must be >= 1");
  std::vector<Perm> cur = gens;
  PermChain c(spec, n);
  for (int step = 0; step < k; ++step) {
    PermChain next(spec, n);
    next.close_under_conjugation(cur);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      Perm xi = perm_inverse(cur[i]);
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        Perm yj = perm_inverse(cur[j]);
        Perm cm = perm_compose(xi, perm_compose(yj, perm_compose(cur[i], cur[j])));
        if (!perm_is_identity(cm)) next.add_generator(cm);
      }
    }
    cur = next.generators();
    c = std::move(next);
  }
  return c;
}

bool StabDerivedReport::passed() const {
  return stab_in_derived && (stab_level_second == 0 || stab_in_second);
}

StabDerivedReport stab_in_derived_check(const SpecPtr& spec, int n) {
  if (spec->degenerate()) throw Error(ErrorKind::DegenerateCase, "(2,1) is excluded");
  const int m = static_cast<int>(spec->m());
  const bool odd = spec->p() != 2;
  if (n <= m + 1 || (odd && n <= m + 3))
    throw Error(ErrorKind::InvalidArgument, "level too small for this check");
  StabDerivedReport r;
  r.n = n;
  const PermChain& g = group_chain(spec, n);
  r.order_group = g.order();
  LevelEvaluator ev(spec, n);
  std::vector<Perm> gens;
  for (const auto& x : group_generators(spec)) gens.push_back(ev.eval(x));

  auto stab_order = [&](int k) {
    PermChain s(spec, n);
    for (const auto& x : g.level_stabilizer_generators(k)) s.add_generator(x);
    return s.order();
  };
  auto contained = [&](int k, const PermChain& d) {
    for (const auto& x : g.level_stabilizer_generators(k))
      if (!d.contains(x)) return false;
    return true;
  };

  PermChain d1 = derived_chain(spec, gens, n, 1);
  r.order_derived = d1.order();
  r.stab_level = m + 1;
  r.order_stab = stab_order(m + 1);
  r.stab_in_derived = contained(m + 1, d1);
  if (odd) {
    PermChain d2 = derived_chain(spec, gens, n, 2);
    r.order_second = d2.order();
    r.stab_level_second = m + 3;
    r.order_stab_second = stab_order(m + 3);
    r.stab_in_second = contained(m + 3, d2);
  }
  return r;
}

Perm project_to_subtree(const GroupSpec& spec, const Perm& g, int n, const Vertex& v) {
  const int k = static_cast<int>(v.size());
  const std::uint32_t sub = level_size(spec, n - k);
  const std::uint32_t off = vertex_index(spec, v) * sub;
  Perm r(sub);
  for (std::uint32_t i = 0; i < sub; ++i) {
    std::uint32_t img = g[off + i];
    if (img < off || img >= off + sub) throw Error(ErrorKind::InvalidArgument, "permutation moves the vertex");
    r[i] = img - off;
  }
  return r;
}

Perm place_in_subtree(const GroupSpec& spec, const Perm& g, int n, const Vertex& v) {
  const int k = static_cast<int>(v.size());
  const std::uint32_t sub = level_size(spec, n - k);
  if (g.size() != sub) throw Error(ErrorKind::LevelMismatch, "subtree permutation has the wrong size");
  const std::uint32_t off = vertex_index(spec, v) * sub;
  Perm r = perm_identity(level_size(spec, n));
  for (std::uint32_t i = 0; i < sub; ++i) r[off + i] = off + g[i];
  return r;
}

PermChain rigid_stab_level(const PermChain& chain, const Vertex& v) {
  const auto& spec = chain.spec();
  const int n = chain.level();
  const int k = static_cast<int>(v.size());
  if (k >= n) throw Error(ErrorKind::InvalidArgument, "vertex must lie above the chain level");
  const Fp p = spec->p();
  const std::uint32_t vi = vertex_index(*spec, v);
  std::vector<TreeVertex> outside, inside;
  std::uint32_t cnt = 1;
  for (int l = 1; l <= n; ++l) {
    cnt *= p;
    for (std::uint32_t u = 0; u < cnt; ++u) {
      bool in = false;
      if (l > k) {
        std::uint32_t anc = u;
        for (int t = l; t > k; --t) anc /= p;
        in = anc == vi;
      }
      (in ? inside : outside).push_back({l, u});
    }
  }
  std::vector<TreeVertex> base = outside;
  base.insert(base.end(), inside.begin(), inside.end());
  VertexChain vc(spec, n, base);
  vc.add_generators(chain.level_stabilizer_generators(k));
  PermChain r(spec, n);
  for (const auto& g : vc.stabilizer_generators(outside.size())) r.add_generator(g);
  return r;
}

BranchReport branch_pair_check(const SpecPtr& spec, int n) {
  if (spec->degenerate()) throw Error(ErrorKind::DegenerateCase, "(2,1) is excluded");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "level must be >= 2");
  BranchReport r;
  SubgroupDesc desc = spec->p() == 2 ? branch_kernel_desc(spec) : derived_subgroup_desc(spec);
  r.over = spec->p() == 2 ? "K" : "G'";
  PermChain top = chain_from(spec, desc, n);
  PermChain low = chain_from(spec, desc, n - 1);
  for (const auto& k : low.generators())
    for (Fp x = 0; x < spec->p(); ++x) {
      ++r.checked;
      if (!top.contains(place_in_subtree(*spec, k, n, {x}))) ++r.failed;
    }
  return r;
}

DensityReport density_check(const SpecPtr& spec, const SubgroupDesc& h, int n, int jobs) {
  DensityReport r;
  r.n = n;
  const PermChain& g = group_chain(spec, n, jobs);
  r.order_group = g.order();
  ChainOptions opt;
  opt.jobs = jobs;
  // H <= G, so stopping at |G| is exact
  opt.log_order_bound = g.log_order();
  PermChain hc = chain_from(spec, h, n, opt);
  r.order_sub = hc.order();
  LevelEvaluator ev(spec, n, jobs);
  r.generators_sift = true;
  for (const auto& x : group_generators(spec))
    if (!hc.contains(ev.eval(x))) r.generators_sift = false;
  return r;
}

}  // namespace sunic
