#include "fgt/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fgt {

namespace {

constexpr std::size_t kCayleyCap = 1024;

}  // namespace

FiniteGroup FiniteGroup::trivial(int degree) {
  return from_sorted_elements(degree, {Permutation::identity(degree)}, {}, "1");
}

FiniteGroup FiniteGroup::from_sorted_elements(int degree, std::vector<Permutation> elements,
                                              std::vector<Permutation> generators,
                                              std::string name) {
  auto rep = std::make_shared<Rep>();
  rep->degree = degree;
  rep->elements = std::move(elements);
  if (rep->elements.empty() || !rep->elements.front().is_identity())
    throw std::invalid_argument("element list must start with the identity");
  if (std::adjacent_find(rep->elements.begin(), rep->elements.end(),
                         [](const Permutation& a, const Permutation& b) { return !(a < b); }) !=
      rep->elements.end())
    throw std::invalid_argument("element list must be strictly sorted");

  const std::size_t n = rep->elements.size();
  FiniteGroup g;
  g.rep_ = rep;
  g.name_ = std::move(name);

  rep->generator_indices.reserve(generators.size());
  for (const auto& p : generators) {
    auto it = std::lower_bound(rep->elements.begin(), rep->elements.end(), p);
    if (it == rep->elements.end() || *it != p)
      throw std::invalid_argument("generator not contained in element list");
    rep->generator_indices.push_back(static_cast<std::uint32_t>(it - rep->elements.begin()));
  }

  if (n <= kCayleyCap) {
    rep->cayley.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Permutation prod = rep->elements[a] * rep->elements[b];
        auto it = std::lower_bound(rep->elements.begin(), rep->elements.end(), prod);
        if (it == rep->elements.end() || *it != prod)
          throw std::invalid_argument("element list is not closed under composition");
        rep->cayley[a * n + b] = static_cast<std::uint32_t>(it - rep->elements.begin());
      }
  }

  rep->inverse.resize(n);
  rep->element_orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Permutation inv = rep->elements[i].inverse();
    auto it = std::lower_bound(rep->elements.begin(), rep->elements.end(), inv);
    if (it == rep->elements.end() || *it != inv)
      throw std::invalid_argument("element list is not closed under inversion");
    rep->inverse[i] = static_cast<std::uint32_t>(it - rep->elements.begin());
    rep->element_orders[i] = rep->elements[i].order();
  }

  rep->abelian = true;
  for (std::size_t a = 0; a < rep->generator_indices.size() && rep->abelian; ++a)
    for (std::size_t b = a + 1; b < rep->generator_indices.size(); ++b) {
      std::uint32_t x = rep->generator_indices[a], y = rep->generator_indices[b];
      if (g.mul(x, y) != g.mul(y, x)) {
        rep->abelian = false;
        break;
      }
    }
  if (rep->generator_indices.empty() && n > 1) {
    // element-list construction without generators: test all pairs
    for (std::size_t a = 1; a < n && rep->abelian; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (g.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)) !=
            g.mul(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a))) {
          rep->abelian = false;
          break;
        }
  }
  return g;
}

std::vector<Permutation> FiniteGroup::generators() const {
  std::vector<Permutation> out;
  out.reserve(rep_->generator_indices.size());
  for (auto i : rep_->generator_indices) out.push_back(rep_->elements[i]);
  return out;
}

FiniteGroup FiniteGroup::with_name(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

std::uint32_t FiniteGroup::mul_slow(std::uint32_t a, std::uint32_t b) const {
  Permutation prod = rep_->elements[a] * rep_->elements[b];
  auto it = std::lower_bound(rep_->elements.begin(), rep_->elements.end(), prod);
  return static_cast<std::uint32_t>(it - rep_->elements.begin());
}

std::uint32_t FiniteGroup::power(std::uint32_t a, long long e) const {
  std::uint32_t base = e < 0 ? inv(a) : a;
  unsigned long long n =
      e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL : static_cast<unsigned long long>(e);
  std::uint32_t acc = kIdentity;
  while (n > 0) {
    if (n & 1ULL) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1ULL;
  }
  return acc;
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (std::size_t i = 0; i < order(); ++i)
    e = std::lcm(e, static_cast<long long>(rep_->element_orders[i]));
  return e;
}

std::optional<std::uint32_t> FiniteGroup::find(const Permutation& p) const {
  if (p.degree() != rep_->degree) return std::nullopt;
  auto it = std::lower_bound(rep_->elements.begin(), rep_->elements.end(), p);
  if (it == rep_->elements.end() || *it != p) return std::nullopt;
  return static_cast<std::uint32_t>(it - rep_->elements.begin());
}

std::uint32_t FiniteGroup::index_of(const Permutation& p) const {
  auto i = find(p);
  if (!i) throw std::invalid_argument("element does not belong to the group");
  return *i;
}

bool FiniteGroup::same_group(const FiniteGroup& other) const {
  if (rep_ == other.rep_) return true;
  return rep_->degree == other.rep_->degree && rep_->elements == other.rep_->elements;
}

std::vector<std::uint32_t> FiniteGroup::small_generating_set() const {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> closure = subgroup_closure(*this, gens);
  const std::size_t n = order();
  while (closure.size() < n) {
    std::vector<bool> in_closure(n, false);
    for (auto i : closure) in_closure[i] = true;
    std::uint32_t best = 0;
    std::size_t best_size = 0;
    for (std::uint32_t cand = 1; cand < n; ++cand) {
      if (in_closure[cand]) continue;
      auto trial = gens;
      trial.push_back(cand);
      std::size_t sz = subgroup_closure(*this, trial).size();
      if (sz > best_size) {
        best_size = sz;
        best = cand;
      }
      if (sz == n) break;  // cannot do better; earliest full extension wins
    }
    gens.push_back(best);
    closure = subgroup_closure(*this, gens);
  }
  return gens;
}

FiniteGroup generate(int degree, const std::vector<Permutation>& gens, const Caps& caps,
                     std::string name) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  if (degree > caps.max_degree)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds cap " +
                      std::to_string(caps.max_degree));
  for (const auto& p : gens)
    if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");

  std::set<Permutation> seen;
  std::vector<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Permutation cur = queue[qi];
    for (const auto& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > caps.max_elements) throw CapExceeded("group too large");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> elements(seen.begin(), seen.end());
  return FiniteGroup::from_sorted_elements(degree, std::move(elements), gens, std::move(name));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Caps& caps) {
  int degree = g.degree() + h.degree();
  if (degree > caps.max_degree) throw CapExceeded("direct product degree exceeds cap");
  if (g.order() * h.order() > caps.max_elements) throw CapExceeded("group too large");

  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) gens.push_back(pad_to_degree(p, degree));
  for (const auto& p : h.generators()) {
    std::vector<std::uint32_t> im(degree);
    for (int i = 0; i < g.degree(); ++i) im[i] = static_cast<std::uint32_t>(i);
    for (int i = 0; i < h.degree(); ++i) im[g.degree() + i] = g.degree() + p[i];
    gens.push_back(Permutation(std::move(im)));
  }
  std::string name = "direct(" + (g.name().empty() ? "?" : g.name()) + "," +
                     (h.name().empty() ? "?" : h.name()) + ")";
  FiniteGroup prod = generate(degree, gens, caps, name);
  if (prod.order() != g.order() * h.order())
    throw std::logic_error("direct product order mismatch");
  return prod;
}

std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g,
                                            const std::vector<std::uint32_t>& seed) {
  const std::size_t n = g.order();
  std::vector<bool> in_set(n, false);
  std::vector<std::uint32_t> members;
  members.reserve(64);
  in_set[FiniteGroup::kIdentity] = true;
  members.push_back(FiniteGroup::kIdentity);
  for (std::size_t qi = 0; qi < members.size(); ++qi) {
    std::uint32_t cur = members[qi];
    for (std::uint32_t gen : seed) {
      std::uint32_t next = g.mul(cur, gen);
      if (!in_set[next]) {
        in_set[next] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace fgt
