#ifndef FGT_HOM_HPP
#define FGT_HOM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fgt/group.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

/// A homomorphism between two finite groups, materialized as the full
/// element map (domain index -> codomain index). Factories validate that
/// the map is single-valued and multiplicative.
class Homomorphism {
public:
  Homomorphism() = default;

  /// Extends images of the given generating sequence to the whole domain.
  /// Returns nothing when the assignment does not define a homomorphism.
  static std::optional<Homomorphism> try_from_generator_images(
      const FiniteGroup& domain, const FiniteGroup& codomain,
      const std::vector<std::uint32_t>& gen_indices, const std::vector<std::uint32_t>& images);

  /// Same, for the domain's own generator list; throws on failure.
  static Homomorphism from_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                            const std::vector<std::uint32_t>& images);

  static Homomorphism from_full_map(const FiniteGroup& domain, const FiniteGroup& codomain,
                                    std::vector<std::uint32_t> map);

  static Homomorphism identity(const FiniteGroup& g);

  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<std::uint32_t>& full_map() const { return map_; }

  std::uint32_t apply_index(std::uint32_t i) const { return map_[i]; }
  Permutation apply(const Permutation& p) const {
    return codomain_.element(map_[domain_.index_of(p)]);
  }

  std::vector<std::uint32_t> image_indices() const;
  Subgroup image_subgroup() const;
  std::vector<std::uint32_t> kernel_indices() const;
  Subgroup kernel_subgroup() const;

  bool is_injective() const;
  bool is_surjective() const { return image_indices().size() == codomain_.order(); }

  /// (this: A->B) composed with (then: B->C), giving A->C.
  Homomorphism compose(const Homomorphism& then) const;

private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<std::uint32_t> map_;
};

}  // namespace fgt

#endif
