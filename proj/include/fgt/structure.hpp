#ifndef FGT_STRUCTURE_HPP
#define FGT_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgt/group.hpp"
#include "fgt/group_ops.hpp"
#include "fgt/hom.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

/// All normal subgroups of g, sorted by order then by member list. Computed
/// by closing the normal closures of single conjugacy classes under joins
/// and meets; complete because every normal subgroup is the join of the
/// closures of the classes it contains.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

struct MonolithReport {
  FiniteGroup group;
  std::vector<Subgroup> minimal_normals;
  Subgroup monolith;        // trivial when the group is not monolithic
  bool is_monolithic = false;
  bool monolith_abelian = false;
};

/// The monolith is the intersection of all non-identity normal subgroups;
/// the trivial group reports a trivial monolith and is not monolithic.
MonolithReport monolith(const FiniteGroup& g);

/// Lower central series: g_1 = G, g_{k+1} = [G, g_k]; nilpotent iff the
/// series reaches the trivial subgroup.
bool is_nilpotent(const FiniteGroup& g);

/// The series itself, ending when it stabilizes (last entry repeated once
/// removed). First entry is the whole group.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);

struct SeriesFactor {
  std::size_t order = 0;
  bool abelian = false;
  long long exponent = 0;
};

/// Checks that the chain is ascending with each term normal in its
/// successor, and returns the factor data (order, abelian flag, exponent
/// of each successor/term quotient). Throws with the failing index when
/// normality breaks.
std::vector<SeriesFactor> verify_subnormal_series(const std::vector<Subgroup>& chain);

struct KMOCheck {
  bool ok = false;
  std::string witness;
};

/// The hypothesis checks on a normal subgroup C of H: C normal, C equal to
/// its centralizer in H, C not a direct product of two nontrivial subgroups
/// normal in H, and gcd(|C|, |H/C|) = 1.
struct KMOReport {
  KMOCheck c_is_normal;
  KMOCheck c_equals_centralizer;
  KMOCheck c_normally_indecomposable;
  KMOCheck orders_coprime;
  bool verdict = false;
};

KMOReport kmo_hypotheses(const FiniteGroup& h, const Subgroup& c);

struct AbelianRetractReport {
  bool criterion_holds = false;
  std::vector<long long> factor_orders;  // primary cyclic decomposition
};

/// Finite abelian case of the nilpotent-strong-retract criterion: some cyclic
/// decomposition has pairwise equal-or-coprime factor orders. The primary
/// decomposition witnesses this whenever any decomposition does, so the check
/// runs on the primary factor list. Throws on non-abelian input.
AbelianRetractReport abelian_strong_retract_criterion(const FiniteGroup& g);

struct SubgroupEnumOptions {
  bool dedup_conjugates = false;
  std::size_t max_subgroups = 2'000'000;
};

/// Complete subgroup enumeration: seeds with all cyclic subgroups and closes
/// under one-element extensions. With dedup_conjugates only one subgroup per
/// conjugacy class is kept (sections and isomorphism classes are unaffected).
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g,
                                          const SubgroupEnumOptions& opts = {});

struct MaximalMonolithicReport {
  bool maximal = true;
  std::optional<std::size_t> violating_candidate;
  std::optional<Homomorphism> violating_embedding;
  std::vector<std::size_t> skipped_non_monolithic;
  bool exhausted = false;
};

/// Searches every candidate with |G| > |H| for a monomorphism H -> G that
/// carries the monolith of H into the monolith of G; any such embedding
/// refutes maximality. Non-monolithic candidates are skipped with notice.
MaximalMonolithicReport is_maximal_monolithic(const FiniteGroup& h,
                                              const std::vector<FiniteGroup>& candidates,
                                              std::uint64_t step_budget = 10'000'000);

}  // namespace fgt

#endif
