#include "fgt/subgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgt {

Subgroup::Subgroup(FiniteGroup parent, std::vector<std::uint32_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (members_.empty() || members_.front() != FiniteGroup::kIdentity)
    throw std::invalid_argument("subgroup must contain the identity");
  if (!std::is_sorted(members_.begin(), members_.end()))
    throw std::invalid_argument("subgroup member list must be sorted");
  // closure check: products and inverses stay inside
  std::vector<bool> mask(parent_.order(), false);
  for (auto i : members_) mask[i] = true;
  for (auto a : members_) {
    if (!mask[parent_.inv(a)]) throw std::invalid_argument("member set not closed under inverse");
    for (auto b : members_)
      if (!mask[parent_.mul(a, b)])
        throw std::invalid_argument("member set not closed under composition");
  }
}

Subgroup Subgroup::generated_by(const FiniteGroup& parent,
                                const std::vector<std::uint32_t>& seed) {
  Subgroup s;
  s.parent_ = parent;
  s.members_ = subgroup_closure(parent, seed);
  return s;
}

Subgroup Subgroup::unchecked(FiniteGroup parent, std::vector<std::uint32_t> members) {
  Subgroup s;
  s.parent_ = std::move(parent);
  s.members_ = std::move(members);
  return s;
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  Subgroup s;
  s.parent_ = parent;
  s.members_ = {FiniteGroup::kIdentity};
  return s;
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  Subgroup s;
  s.parent_ = parent;
  s.members_.resize(parent.order());
  for (std::size_t i = 0; i < parent.order(); ++i) s.members_[i] = static_cast<std::uint32_t>(i);
  return s;
}

bool Subgroup::contains_index(std::uint32_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool Subgroup::contains(const Subgroup& other) const {
  if (!parent_.same_group(other.parent_)) return false;
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

std::vector<bool> Subgroup::member_mask() const {
  std::vector<bool> mask(parent_.order(), false);
  for (auto i : members_) mask[i] = true;
  return mask;
}

std::vector<std::uint32_t> Subgroup::generating_indices() const {
  if (members_.size() == 1) return {};
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> closure = {FiniteGroup::kIdentity};
  while (closure.size() < members_.size()) {
    std::vector<bool> mask(parent_.order(), false);
    for (auto i : closure) mask[i] = true;
    std::uint32_t best = 0;
    std::size_t best_size = 0;
    for (auto cand : members_) {
      if (mask[cand]) continue;
      auto trial = gens;
      trial.push_back(cand);
      std::size_t sz = subgroup_closure(parent_, trial).size();
      if (sz > best_size) {
        best_size = sz;
        best = cand;
      }
      if (sz == members_.size()) break;
    }
    gens.push_back(best);
    closure = subgroup_closure(parent_, gens);
  }
  return gens;
}

FiniteGroup Subgroup::as_group(std::string name) const {
  std::vector<Permutation> elems;
  elems.reserve(members_.size());
  for (auto i : members_) elems.push_back(parent_.element(i));
  std::vector<Permutation> gens;
  for (auto i : generating_indices()) gens.push_back(parent_.element(i));
  return FiniteGroup::from_sorted_elements(parent_.degree(), std::move(elems), std::move(gens),
                                           std::move(name));
}

bool Subgroup::same_subgroup(const Subgroup& other) const {
  return parent_.same_group(other.parent_) && members_ == other.members_;
}

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_group(b.parent()))
    throw std::invalid_argument("subgroups have different parent groups");
}

}  // namespace

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<std::uint32_t> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Subgroup::unchecked(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<std::uint32_t> seed = a.generating_indices();
  auto bg = b.generating_indices();
  seed.insert(seed.end(), bg.begin(), bg.end());
  return Subgroup::generated_by(a.parent(), seed);
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  if (!s.parent().same_group(g)) throw std::invalid_argument("subgroup of a different group");
  auto mask = s.member_mask();
  for (auto gen : g.generator_indices())
    for (auto m : s.members())
      if (!mask[g.conjugate(m, gen)]) return false;
  return true;
}

bool is_normal_in(const Subgroup& outer, const Subgroup& inner) {
  require_same_parent(outer, inner);
  if (!outer.contains(inner)) return false;
  const FiniteGroup& g = outer.parent();
  auto mask = inner.member_mask();
  for (auto by : outer.members())
    for (auto m : inner.members())
      if (!mask[g.conjugate(m, by)]) return false;
  return true;
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  if (!s.parent().same_group(g)) throw std::invalid_argument("subgroup of a different group");
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (auto m : s.members())
      if (g.mul(x, m) != g.mul(m, x)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(x);
  }
  return Subgroup::unchecked(g, std::move(out));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  if (!s.parent().same_group(g)) throw std::invalid_argument("subgroup of a different group");
  auto mask = s.member_mask();
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (auto m : s.members())
      if (!mask[g.conjugate(m, x)]) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(x);
  }
  return Subgroup::unchecked(g, std::move(out));
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup conjugate_subgroup(const Subgroup& s, std::uint32_t by) {
  const FiniteGroup& g = s.parent();
  std::vector<std::uint32_t> out;
  out.reserve(s.order());
  for (auto m : s.members()) out.push_back(g.conjugate(m, by));
  std::sort(out.begin(), out.end());
  return Subgroup::unchecked(g, std::move(out));
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& seed) {
  // close the seed under conjugation by generators, then take the subgroup
  std::vector<bool> mask(g.order(), false);
  std::vector<std::uint32_t> conj;
  for (auto s : seed)
    if (!mask[s]) {
      mask[s] = true;
      conj.push_back(s);
    }
  for (std::size_t qi = 0; qi < conj.size(); ++qi)
    for (auto gen : g.generator_indices()) {
      std::uint32_t c = g.conjugate(conj[qi], gen);
      if (!mask[c]) {
        mask[c] = true;
        conj.push_back(c);
      }
      std::uint32_t ci = g.conjugate(conj[qi], g.inv(gen));
      if (!mask[ci]) {
        mask[ci] = true;
        conj.push_back(ci);
      }
    }
  return Subgroup::generated_by(g, conj);
}

Subgroup embed_as_subgroup(const FiniteGroup& g, const FiniteGroup& h) {
  if (h.degree() > g.degree())
    throw std::invalid_argument("embedded group degree exceeds ambient degree");
  std::vector<std::uint32_t> members;
  members.reserve(h.order());
  for (const auto& p : h.elements()) members.push_back(g.index_of(pad_to_degree(p, g.degree())));
  std::sort(members.begin(), members.end());
  return Subgroup(g, std::move(members));  // validates closure of the embedded copy
}

}  // namespace fgt
