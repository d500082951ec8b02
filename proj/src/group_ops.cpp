#include "fgt/group_ops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fgt/search.hpp"

namespace fgt {

std::vector<std::uint32_t> ConjugacyClasses::representatives() const {
  std::vector<std::uint32_t> reps;
  reps.reserve(classes.size());
  for (const auto& c : classes) reps.push_back(c.front());
  return reps;
}

std::vector<std::size_t> ConjugacyClasses::sizes() const {
  std::vector<std::size_t> s;
  s.reserve(classes.size());
  for (const auto& c : classes) s.push_back(c.size());
  return s;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ConjugacyClasses cc;
  cc.class_of.assign(n, 0xffffffffu);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cc.class_of[i] != 0xffffffffu) continue;
    std::uint32_t id = static_cast<std::uint32_t>(cc.classes.size());
    std::vector<std::uint32_t> orbit = {i};
    cc.class_of[i] = id;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi)
      for (auto gen : g.generator_indices()) {
        std::uint32_t c = g.conjugate(orbit[qi], gen);
        if (cc.class_of[c] == 0xffffffffu) {
          cc.class_of[c] = id;
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    cc.classes.push_back(std::move(orbit));
  }
  return cc;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Subgroup sylow_subgroup(const FiniteGroup& g, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  long long p_part = 1;
  long long n = static_cast<long long>(g.order());
  while (n % p == 0) {
    p_part *= p;
    n /= p;
  }
  Subgroup sylow = Subgroup::trivial(g);
  while (static_cast<long long>(sylow.order()) < p_part) {
    Subgroup norm = normalizer(g, sylow);
    bool grown = false;
    for (auto x : norm.members()) {
      if (sylow.contains_index(x)) continue;
      if (!sylow.contains_index(g.power(x, p))) continue;
      auto seed = sylow.generating_indices();
      seed.push_back(x);
      Subgroup next = Subgroup::generated_by(g, seed);
      if (next.order() != sylow.order() * static_cast<std::size_t>(p))
        throw std::logic_error("sylow ascent produced unexpected order");
      sylow = std::move(next);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow ascent stalled below the p-part");
  }
  return sylow;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.parent().same_group(g)) throw std::invalid_argument("subgroup of a different group");
  if (!is_normal(g, n)) throw std::invalid_argument("subgroup is not normal");
  const std::size_t order = g.order();
  const std::size_t m = order / n.order();

  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> coset_of(order, kUnset);
  std::vector<std::uint32_t> reps;
  reps.reserve(m);
  for (std::uint32_t i = 0; i < order; ++i) {
    if (coset_of[i] != kUnset) continue;
    std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (auto x : n.members()) coset_of[g.mul(x, i)] = id;
  }
  if (reps.size() != m) throw std::logic_error("coset count mismatch");

  // right-multiplication action on cosets; canonical relabeling afterwards
  std::vector<Permutation> raw(order, Permutation());
  for (std::uint32_t e = 0; e < order; ++e) {
    std::vector<std::uint32_t> im(m);
    for (std::uint32_t c = 0; c < m; ++c) im[c] = coset_of[g.mul(reps[c], e)];
    raw[e] = Permutation(std::move(im));
  }
  std::vector<Permutation> elems = raw;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.size() != m) throw std::logic_error("quotient order mismatch");

  std::vector<Permutation> gens;
  for (auto gi : g.generator_indices()) gens.push_back(raw[gi]);
  std::string name = (g.name().empty() ? "G" : g.name()) + "/N" + std::to_string(n.order());
  FiniteGroup q = FiniteGroup::from_sorted_elements(static_cast<int>(m), std::move(elems),
                                                    std::move(gens), std::move(name));

  std::vector<std::uint32_t> map(order);
  for (std::uint32_t e = 0; e < order; ++e) map[e] = q.index_of(raw[e]);
  Homomorphism proj = Homomorphism::from_full_map(g, q, std::move(map));
  return QuotientResult{std::move(q), std::move(proj)};
}

namespace {

std::map<int, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<int, std::size_t> h;
  for (std::uint32_t i = 0; i < g.order(); ++i) ++h[g.element_order(i)];
  return h;
}

}  // namespace

std::optional<Homomorphism> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                           std::uint64_t step_budget) {
  if (g.order() != h.order()) return std::nullopt;
  if (order_histogram(g) != order_histogram(h)) return std::nullopt;
  {
    auto sg = conjugacy_classes(g).sizes();
    auto sh = conjugacy_classes(h).sizes();
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }
  if (center(g).order() != center(h).order()) return std::nullopt;
  if (abelianization_invariants(g) != abelianization_invariants(h)) return std::nullopt;

  HomSearchResult res = find_monomorphism(g, h, step_budget);
  if (res.status == HomSearchResult::Status::Exhausted)
    throw CapExceeded("isomorphism search budget exceeded");
  if (res.status == HomSearchResult::Status::Found) return res.hom;
  return std::nullopt;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  return commutator_with(g, Subgroup::whole(g));
}

Subgroup commutator_with(const FiniteGroup& g, const Subgroup& n) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::uint32_t> comms;
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (auto b : n.members()) {
      std::uint32_t c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return Subgroup::generated_by(g, comms);
}

std::vector<long long> primary_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw std::invalid_argument("primary invariants require an abelian group");
  std::vector<long long> factors;
  for (auto [p, e] : factorize(static_cast<long long>(g.order()))) {
    // c[k] = #elements whose order divides p^k; the number of primary
    // factors of order >= p^k is log_p(c[k]) - log_p(c[k-1])
    std::vector<int> logs = {0};
    for (int k = 1; k <= e; ++k) {
      long long pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      std::size_t count = 0;
      for (std::uint32_t i = 0; i < g.order(); ++i) {
        long long ord = g.element_order(i);
        if (pk % ord == 0) ++count;
      }
      int lg = 0;
      std::size_t c = count;
      while (c > 1) {
        c /= static_cast<std::size_t>(p);
        ++lg;
      }
      logs.push_back(lg);
    }
    // logs[k] - logs[k-1] counts factors with exponent >= k
    for (int k = 1; k <= e; ++k) {
      long long pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      int at_least_k = logs[k] - logs[k - 1];
      int at_least_next = (k < e) ? logs[k + 1] - logs[k] : 0;
      for (int i = 0; i < at_least_k - at_least_next; ++i) factors.push_back(pk);
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::vector<long long> abelianization_invariants(const FiniteGroup& g) {
  Subgroup derived = commutator_subgroup(g);
  if (derived.is_trivial()) return primary_invariants(g);
  return primary_invariants(quotient(g, derived).group);
}

}  // namespace fgt
