#ifndef FGT_GROUP_OPS_HPP
#define FGT_GROUP_OPS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fgt/group.hpp"
#include "fgt/hom.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

/// Partition of the element set into conjugacy classes. Classes are ordered
/// by their least element; each class is sorted, so representatives()[c] is
/// the canonical (least) member of class c.
struct ConjugacyClasses {
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> class_of;

  std::vector<std::uint32_t> representatives() const;
  std::vector<std::size_t> sizes() const;
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// A Sylow p-subgroup, grown by normalizer ascent: while |P| is short of the
/// full p-part, some x in N_G(P) \ P has x^p in P, and <P, x> is a p-group
/// p times as large.
Subgroup sylow_subgroup(const FiniteGroup& g, long long p);

struct QuotientResult {
  FiniteGroup group;       // G/N via the regular action on cosets of N
  Homomorphism projection; // G -> G/N
};

/// Requires n normal in g (checked). The quotient acts regularly on the
/// cosets of n, so its degree equals its order.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

/// Isomorphism recognition: invariant pruning (order, element-order
/// histogram, class sizes, center order, abelianization) followed by
/// generator-image backtracking. The returned map is the canonical least.
std::optional<Homomorphism> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                           std::uint64_t step_budget = 10'000'000);

/// [G, G].
Subgroup commutator_subgroup(const FiniteGroup& g);

/// [G, N] for a subgroup N given inside G (closure of all commutators).
Subgroup commutator_with(const FiniteGroup& g, const Subgroup& n);

/// Orders of the primary cyclic factors (prime powers, ascending).
/// Requires an abelian group.
std::vector<long long> primary_invariants(const FiniteGroup& g);

/// Primary invariants of G/[G,G].
std::vector<long long> abelianization_invariants(const FiniteGroup& g);

bool is_prime(long long n);
std::vector<std::pair<long long, int>> factorize(long long n);

}  // namespace fgt

#endif
