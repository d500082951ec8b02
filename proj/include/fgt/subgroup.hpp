#ifndef FGT_SUBGROUP_HPP
#define FGT_SUBGROUP_HPP

#include <cstdint>
#include <vector>

#include "fgt/group.hpp"

namespace fgt {

/// A subgroup of an ambient group, held as a sorted list of element indices
/// into the parent. Index order coincides with the canonical element order,
/// so the member list itself is canonical.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(FiniteGroup parent, std::vector<std::uint32_t> members);

  /// Closure of the given indices inside parent.
  static Subgroup generated_by(const FiniteGroup& parent,
                               const std::vector<std::uint32_t>& seed);

  /// Fast path for member lists already known to be closed (sorted).
  static Subgroup unchecked(FiniteGroup parent, std::vector<std::uint32_t> members);
  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_.order(); }

  bool contains_index(std::uint32_t i) const;
  bool contains(const Subgroup& other) const;  // other ⊆ this, same parent

  /// Membership bitmask over parent indices (size = parent order).
  std::vector<bool> member_mask() const;

  /// Small generating set (indices into parent).
  std::vector<std::uint32_t> generating_indices() const;

  /// The subgroup as a standalone group: element i of the result corresponds
  /// to parent index members()[i] (canonical orders agree).
  FiniteGroup as_group(std::string name = "") const;

  bool same_subgroup(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_group(b.parent_) && a.members_ == b.members_;
  }

private:
  FiniteGroup parent_;
  std::vector<std::uint32_t> members_;
};

/// Set intersection of two subgroups of one parent.
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Join: subgroup generated by the union.
Subgroup join(const Subgroup& a, const Subgroup& b);

/// True when s is normal in g (conjugation of every member by every
/// group generator stays inside s).
bool is_normal(const FiniteGroup& g, const Subgroup& s);

/// Normality inside an intermediate subgroup: conjugation by members of outer.
bool is_normal_in(const Subgroup& outer, const Subgroup& inner);

/// {g in G : gs = sg for all s in S}.
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);

/// {g in G : g^-1 S g = S}.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);

/// The center Z(G) as a subgroup.
Subgroup center(const FiniteGroup& g);

/// x^-1 S x as a subgroup.
Subgroup conjugate_subgroup(const Subgroup& s, std::uint32_t by);

/// Smallest normal subgroup of g containing the given elements.
Subgroup normal_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& seed);

/// The subgroup of g whose members are exactly the padded elements of h;
/// requires degree(h) <= degree(g) and every padded element to lie in g.
Subgroup embed_as_subgroup(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace fgt

#endif
