#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sunic/element.hpp"
#include "sunic/quotients.hpp"

namespace sunic {

/// H(q) = <(ab)^q, B> for the dihedral witness b.
struct HqDesc {
  std::int64_t q = 1;
  BVec witness;
  std::vector<Element> generators;  // (ab)^q, b_0, ..., b_{m-1}
  SubgroupDesc subgroup() const;
};

/// Throws EvenQ, NoDihedralWitness, DegenerateCase (m < 2).
HqDesc hq(const SpecPtr& spec, std::int64_t q);

/// {x, x^(a(ba)^(q-1)) : x basis of B}, generating St_H(1).
std::vector<Element> hq_stab_gens(const SpecPtr& spec, std::int64_t q);

struct SubdirectLift {
  Element s, h0, h1;
  std::int64_t n = 0;  // h1 = (ab)^(q n)
};
/// s in St(1) with sections (g h0, h1), h0 in {1, b}, h1 = (ab)^(qn).
SubdirectLift subdirect_lift(const SpecPtr& spec, std::int64_t q, const Element& g);

/// x = prefix * core * suffix with prefix, suffix in St_<a,b>(1).
struct LambdaForm {
  Element prefix, core, suffix;
  std::size_t lambda_hat = 0;  // letters in core; an upper bound for lambda
};
/// Throws NotLevelOneStabilized.
LambdaForm lambda_form(const Element& x);

/// Z-action screen for H(q): h may lie in H(q) only if it maps n into
/// {n, -n} + qZ for every sampled n in [-3q, 3q]. A necessary condition.
struct ScreenVerdict {
  bool possibly_in = true;
  std::int64_t n = 0, image = 0;  // a failing sample when !possibly_in
};
ScreenVerdict hq_screen(const Element& h, std::int64_t q);

struct ReductionStep {
  int depth = 0;
  Element element;
  LambdaForm form;
  std::string screen;      // verdicts met while forming this step
  bool bound_ok = true;    // lambda_hat <= ceil((previous + 3) / 2)
};
struct ReductionTrace {
  std::int64_t q = 0;
  std::vector<ReductionStep> steps;
  bool reached = false;  // final lambda_hat <= 3
  bool bounds_ok = true;
};
/// HEURISTIC: follows the length-reduction loop along the vertices 1, 11, ...
/// Throws ScreenInconclusive if the screen cannot certify a non-member.
ReductionTrace reduction_trace(const SpecPtr& spec, std::int64_t q, const Element& g, int max_steps);

struct MaximalDesc {
  std::vector<Fp> functional;                // on (a, b_0, ..., b_{m-1})
  std::vector<std::vector<Fp>> kernel_basis;
  std::string recipe;
};
struct MaximalsReport {
  std::uint64_t count = 0;               // hyperplanes of F_p^(m+1)
  std::uint64_t nonzero_functionals = 0;  // p^(m+1) - 1
  std::vector<MaximalDesc> subgroups;
};
/// Index-p subgroups containing G', one per hyperplane. Throws DegenerateCase.
MaximalsReport count_finite_index_maximals(const SpecPtr& spec);
SubgroupDesc maximal_subgroup_desc(const SpecPtr& spec, const MaximalDesc& d);

struct ClassifyReport {
  std::string polynomial;
  Fp p = 0;
  std::size_t m = 0;
  bool faithful = false;
  bool degenerate = false;
  std::optional<bool> torsion;       // unset for (2, 1)
  std::optional<BVec> dihedral;
  bool x_plus_1 = false;             // f(-1) = 0 over F_p
  std::optional<std::uint64_t> maximals;
  std::string records() const;
};
ClassifyReport classify(const SpecPtr& spec);

struct SuiteItem {
  std::string item;
  std::string status;  // pass, fail, skip
  std::string witness;
};
struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;
  bool passed() const;
  std::string records() const;
};
SuiteReport identity_suite(const SpecPtr& spec);

/// Identities, stabilizer-in-derived, branch pairs, density and properness
/// of H(q) where they apply.
SuiteReport verify_suite(const SpecPtr& spec, int jobs = 1);

}  // namespace sunic
