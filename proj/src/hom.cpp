#include "fgt/hom.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgt {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

std::vector<std::uint32_t> effective_generators(const FiniteGroup& g) {
  if (!g.generator_indices().empty() || g.order() == 1) return g.generator_indices();
  return g.small_generating_set();
}

}  // namespace

std::optional<Homomorphism> Homomorphism::try_from_generator_images(
    const FiniteGroup& domain, const FiniteGroup& codomain,
    const std::vector<std::uint32_t>& gen_indices, const std::vector<std::uint32_t>& images) {
  if (gen_indices.size() != images.size())
    throw std::invalid_argument("generator/image count mismatch");
  const std::size_t n = domain.order();
  std::vector<std::uint32_t> map(n, kUnset);
  map[FiniteGroup::kIdentity] = FiniteGroup::kIdentity;
  std::vector<std::uint32_t> queue = {FiniteGroup::kIdentity};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t x = queue[qi];
    for (std::size_t k = 0; k < gen_indices.size(); ++k) {
      std::uint32_t y = domain.mul(x, gen_indices[k]);
      if (map[y] == kUnset) {
        map[y] = codomain.mul(map[x], images[k]);
        queue.push_back(y);
      }
    }
  }
  for (auto v : map)
    if (v == kUnset) throw std::invalid_argument("given elements do not generate the domain");

  // well-definedness: multiplicativity against every generator suffices,
  // since each element is a product of generators
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < gen_indices.size(); ++k)
      if (map[domain.mul(x, gen_indices[k])] != codomain.mul(map[x], images[k]))
        return std::nullopt;

  Homomorphism h;
  h.domain_ = domain;
  h.codomain_ = codomain;
  h.map_ = std::move(map);
  return h;
}

Homomorphism Homomorphism::from_generator_images(const FiniteGroup& domain,
                                                 const FiniteGroup& codomain,
                                                 const std::vector<std::uint32_t>& images) {
  auto h = try_from_generator_images(domain, codomain, effective_generators(domain), images);
  if (!h) throw std::invalid_argument("generator images do not define a homomorphism");
  return *h;
}

Homomorphism Homomorphism::from_full_map(const FiniteGroup& domain, const FiniteGroup& codomain,
                                         std::vector<std::uint32_t> map) {
  if (map.size() != domain.order()) throw std::invalid_argument("map size mismatch");
  if (map[FiniteGroup::kIdentity] != FiniteGroup::kIdentity)
    throw std::invalid_argument("map does not fix the identity");
  auto gens = effective_generators(domain);
  for (std::uint32_t x = 0; x < domain.order(); ++x)
    for (auto g : gens)
      if (map[domain.mul(x, g)] != codomain.mul(map[x], map[g]))
        throw std::invalid_argument("map is not multiplicative");
  Homomorphism h;
  h.domain_ = domain;
  h.codomain_ = codomain;
  h.map_ = std::move(map);
  return h;
}

Homomorphism Homomorphism::identity(const FiniteGroup& g) {
  Homomorphism h;
  h.domain_ = g;
  h.codomain_ = g;
  h.map_.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) h.map_[i] = static_cast<std::uint32_t>(i);
  return h;
}

std::vector<std::uint32_t> Homomorphism::image_indices() const {
  std::vector<std::uint32_t> im = map_;
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

Subgroup Homomorphism::image_subgroup() const {
  return Subgroup::unchecked(codomain_, image_indices());
}

std::vector<std::uint32_t> Homomorphism::kernel_indices() const {
  std::vector<std::uint32_t> ker;
  for (std::uint32_t i = 0; i < map_.size(); ++i)
    if (map_[i] == FiniteGroup::kIdentity) ker.push_back(i);
  return ker;
}

Subgroup Homomorphism::kernel_subgroup() const {
  return Subgroup::unchecked(domain_, kernel_indices());
}

bool Homomorphism::is_injective() const { return image_indices().size() == domain_.order(); }

Homomorphism Homomorphism::compose(const Homomorphism& then) const {
  if (!codomain_.same_group(then.domain_))
    throw std::invalid_argument("composition domain/codomain mismatch");
  Homomorphism h;
  h.domain_ = domain_;
  h.codomain_ = then.codomain_;
  h.map_.resize(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) h.map_[i] = then.map_[map_[i]];
  return h;
}

}  // namespace fgt
