#pragma once

#include <string>
#include <vector>

#include "sunic/element.hpp"
#include "sunic/perm_chain.hpp"

namespace sunic {

struct SubgroupDesc {
  std::string name;
  std::vector<Element> generators;
  bool normal_closure = false;  // take the normal closure in G
};

/// a, b_0, ..., b_{m-1}
std::vector<Element> group_generators(const SpecPtr& spec);
SubgroupDesc whole_group(const SpecPtr& spec);
/// G' = <[x, y] : x, y generators>^G
SubgroupDesc derived_subgroup_desc(const SpecPtr& spec);
/// K = <[a, x] : x in B_1>^G  (p = 2, m >= 2)
SubgroupDesc branch_kernel_desc(const SpecPtr& spec);

struct ChainOptions {
  int jobs = 1;
  std::size_t log_order_bound = 0;  // 0 = none
};

PermChain chain_from(const SpecPtr& spec, const SubgroupDesc& h, int n, const ChainOptions& opt = {});

/// Cached chain of pi_n(G).
const PermChain& group_chain(const SpecPtr& spec, int n, int jobs = 1);

bool member(const PermChain& chain, const LevelPerm& g);

/// k-th derived subgroup of the group generated by gens: normal closure of
/// the commutators of the previous generators inside the previous group.
PermChain derived_chain(const SpecPtr& spec, const std::vector<Perm>& gens, int n, int k);

struct StabDerivedReport {
  int n = 0;
  int stab_level = 0;           // m + 1
  bool stab_in_derived = false;
  int stab_level_second = 0;    // m + 3 (p odd), else 0
  bool stab_in_second = false;  // p odd only
  BigInt order_group, order_stab, order_derived, order_stab_second, order_second;
  bool passed() const;
};
StabDerivedReport stab_in_derived_check(const SpecPtr& spec, int n);

/// Kernel of the action of St(|v|) on the leaves outside the subtree at v.
PermChain rigid_stab_level(const PermChain& chain, const Vertex& v);

/// Restriction of a level-n permutation fixing v to the subtree at v.
Perm project_to_subtree(const GroupSpec& spec, const Perm& g, int n, const Vertex& v);
/// Permutation acting as g on the subtree at v (level n) and trivially elsewhere.
Perm place_in_subtree(const GroupSpec& spec, const Perm& g, int n, const Vertex& v);

struct BranchReport {
  std::string over;  // "K" or "G'"
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool passed() const { return failed == 0; }
};
BranchReport branch_pair_check(const SpecPtr& spec, int n);

struct DensityReport {
  int n = 0;
  BigInt order_group, order_sub;
  bool generators_sift = false;
  bool dense() const { return generators_sift && order_group == order_sub; }
};
DensityReport density_check(const SpecPtr& spec, const SubgroupDesc& h, int n, int jobs = 1);

}  // namespace sunic
