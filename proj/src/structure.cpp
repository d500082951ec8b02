#include "fgt/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fgt/search.hpp"

namespace fgt {

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> lattice;
  auto add = [&](std::vector<std::uint32_t> members) {
    if (seen.insert(members).second) lattice.push_back(std::move(members));
  };

  add({FiniteGroup::kIdentity});
  for (const auto& cls : conjugacy_classes(g).classes) {
    if (cls.size() == 1 && cls.front() == FiniteGroup::kIdentity) continue;
    add(subgroup_closure(g, cls));
  }

  // close under joins and meets
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<std::uint32_t> both = lattice[i];
      both.insert(both.end(), lattice[j].begin(), lattice[j].end());
      add(subgroup_closure(g, both));
      std::vector<std::uint32_t> meet;
      std::set_intersection(lattice[i].begin(), lattice[i].end(), lattice[j].begin(),
                            lattice[j].end(), std::back_inserter(meet));
      add(std::move(meet));
    }
  }

  std::sort(lattice.begin(), lattice.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<Subgroup> out;
  out.reserve(lattice.size());
  for (auto& members : lattice) out.push_back(Subgroup::unchecked(g, std::move(members)));
  return out;
}

MonolithReport monolith(const FiniteGroup& g) {
  MonolithReport rep;
  rep.group = g;
  std::vector<Subgroup> normals = normal_subgroups(g);

  std::vector<const Subgroup*> nontrivial;
  for (const auto& n : normals)
    if (!n.is_trivial()) nontrivial.push_back(&n);

  for (const auto* n : nontrivial) {
    bool minimal = true;
    for (const auto* m : nontrivial)
      if (m != n && m->order() < n->order() && n->contains(*m)) {
        minimal = false;
        break;
      }
    if (minimal) rep.minimal_normals.push_back(*n);
  }

  Subgroup inter = Subgroup::whole(g);
  for (const auto* n : nontrivial) inter = intersect(inter, *n);
  if (nontrivial.empty()) inter = Subgroup::trivial(g);
  rep.monolith = std::move(inter);
  rep.is_monolithic = rep.monolith.order() > 1;
  rep.monolith_abelian = rep.is_monolithic && rep.monolith.as_group().is_abelian();
  return rep;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series;
  series.push_back(Subgroup::whole(g));
  while (true) {
    Subgroup next = commutator_with(g, series.back());
    if (next.members() == series.back().members()) break;  // stabilized
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().is_trivial(); }

std::vector<SeriesFactor> verify_subnormal_series(const std::vector<Subgroup>& chain) {
  if (chain.size() < 2) throw std::invalid_argument("series needs at least two terms");
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!chain[i].parent().same_group(chain.front().parent()))
      throw std::invalid_argument("series terms live in different parent groups");
    if (!chain[i].contains(chain[i - 1]))
      throw std::invalid_argument("series is not ascending at index " + std::to_string(i - 1));
  }
  std::vector<SeriesFactor> factors;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!is_normal_in(chain[i + 1], chain[i]))
      throw std::invalid_argument("term " + std::to_string(i) + " is not normal in term " +
                                  std::to_string(i + 1));
    FiniteGroup big = chain[i + 1].as_group();
    std::vector<std::uint32_t> inner;
    inner.reserve(chain[i].order());
    for (auto m : chain[i].members())
      inner.push_back(big.index_of(chain.front().parent().element(m)));
    std::sort(inner.begin(), inner.end());
    QuotientResult q = quotient(big, Subgroup::unchecked(big, std::move(inner)));
    SeriesFactor f;
    f.order = q.group.order();
    f.abelian = q.group.is_abelian();
    f.exponent = q.group.exponent();
    factors.push_back(f);
  }
  return factors;
}

KMOReport kmo_hypotheses(const FiniteGroup& h, const Subgroup& c) {
  if (!c.parent().same_group(h)) throw std::invalid_argument("C must be a subgroup of H");
  KMOReport rep;

  rep.c_is_normal.ok = is_normal(h, c);
  if (!rep.c_is_normal.ok) {
    for (auto gen : h.generator_indices()) {
      for (auto m : c.members())
        if (!c.contains_index(h.conjugate(m, gen))) {
          rep.c_is_normal.witness = "conjugate of " + h.element(m).cycle_string() + " by " +
                                    h.element(gen).cycle_string() + " escapes C";
          break;
        }
      if (!rep.c_is_normal.witness.empty()) break;
    }
    rep.verdict = false;
    // Without normality the remaining hypotheses are not evaluated.
    return rep;
  }

  Subgroup cent = centralizer(h, c);
  rep.c_equals_centralizer.ok = cent.members() == c.members();
  if (!rep.c_equals_centralizer.ok) {
    std::vector<std::uint32_t> diff;
    std::set_symmetric_difference(cent.members().begin(), cent.members().end(),
                                  c.members().begin(), c.members().end(),
                                  std::back_inserter(diff));
    rep.c_equals_centralizer.witness =
        "centralizer differs at " + h.element(diff.front()).cycle_string();
  }

  // scan pairs of nontrivial subgroups of C that are normal in H
  rep.c_normally_indecomposable.ok = true;
  {
    FiniteGroup c_group = c.as_group();
    std::vector<Subgroup> candidates;
    for (const auto& sub : enumerate_subgroups(c_group)) {
      if (sub.order() == 1 || sub.order() == c.order()) continue;
      std::vector<std::uint32_t> in_h;
      in_h.reserve(sub.order());
      for (auto m : sub.members()) in_h.push_back(c.members()[m]);
      std::sort(in_h.begin(), in_h.end());
      Subgroup cand = Subgroup::unchecked(h, std::move(in_h));
      if (is_normal(h, cand)) candidates.push_back(std::move(cand));
    }
    for (std::size_t i = 0; i < candidates.size() && rep.c_normally_indecomposable.ok; ++i)
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        const Subgroup& a = candidates[i];
        const Subgroup& b = candidates[j];
        if (a.order() * b.order() != c.order()) continue;
        if (!intersect(a, b).is_trivial()) continue;
        bool commute = true;
        for (auto x : a.members()) {
          for (auto y : b.members())
            if (h.mul(x, y) != h.mul(y, x)) {
              commute = false;
              break;
            }
          if (!commute) break;
        }
        if (commute) {
          rep.c_normally_indecomposable.ok = false;
          rep.c_normally_indecomposable.witness =
              "C = A x B with |A| = " + std::to_string(a.order()) +
              ", |B| = " + std::to_string(b.order());
          break;
        }
      }
  }

  long long c_order = static_cast<long long>(c.order());
  long long index = static_cast<long long>(h.order()) / c_order;
  long long gcd = std::gcd(c_order, index);
  rep.orders_coprime.ok = gcd == 1;
  rep.orders_coprime.witness = "gcd(|C|, |H/C|) = " + std::to_string(gcd);

  rep.verdict = rep.c_is_normal.ok && rep.c_equals_centralizer.ok &&
                rep.c_normally_indecomposable.ok && rep.orders_coprime.ok;
  return rep;
}

AbelianRetractReport abelian_strong_retract_criterion(const FiniteGroup& g) {
  if (!g.is_abelian())
    throw std::invalid_argument("criterion applies to abelian groups only");
  AbelianRetractReport rep;
  rep.factor_orders = primary_invariants(g);
  rep.criterion_holds = true;
  for (std::size_t i = 0; i < rep.factor_orders.size() && rep.criterion_holds; ++i)
    for (std::size_t j = i + 1; j < rep.factor_orders.size(); ++j) {
      long long a = rep.factor_orders[i], b = rep.factor_orders[j];
      if (a != b && std::gcd(a, b) != 1) {
        rep.criterion_holds = false;
        break;
      }
    }
  return rep;
}

namespace {

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<std::uint64_t> to_bits(const std::vector<std::uint32_t>& members, std::size_t words) {
  std::vector<std::uint64_t> bits(words, 0);
  for (auto m : members) bits[m >> 6] |= (1ull << (m & 63));
  return bits;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, const SubgroupEnumOptions& opts) {
  const std::size_t n = g.order();
  const std::size_t words = (n + 63) / 64;

  struct Entry {
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Entry> entries;
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, BitsetHash> seen;
  std::unordered_map<std::vector<std::uint64_t>, bool, BitsetHash> raw_seen;

  auto canonical_members = [&](const std::vector<std::uint32_t>& members) {
    // least member set over the conjugation orbit (BFS by group generators)
    std::set<std::vector<std::uint32_t>> orbit;
    std::vector<std::vector<std::uint32_t>> queue = {members};
    orbit.insert(members);
    std::vector<std::uint32_t> scratch(members.size());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (auto gen : g.generator_indices()) {
        for (std::size_t i = 0; i < members.size(); ++i)
          scratch[i] = g.conjugate(queue[qi][i], gen);
        std::sort(scratch.begin(), scratch.end());
        if (orbit.insert(scratch).second) queue.push_back(scratch);
      }
    }
    return *orbit.begin();
  };

  auto add = [&](std::vector<std::uint32_t> members, std::vector<std::uint32_t> gens) -> bool {
    auto raw_bits = to_bits(members, words);
    if (!raw_seen.emplace(raw_bits, true).second) return false;
    if (opts.dedup_conjugates) {
      std::vector<std::uint32_t> canon = canonical_members(members);
      auto canon_bits = to_bits(canon, words);
      if (seen.count(canon_bits)) return false;
      seen.emplace(std::move(canon_bits), static_cast<std::uint32_t>(entries.size()));
      if (canon != members) {
        // store the canonical representative; regenerate a generating chain
        std::vector<std::uint32_t> canon_gens;
        std::vector<std::uint32_t> closure = {FiniteGroup::kIdentity};
        for (auto m : canon) {
          if (std::binary_search(closure.begin(), closure.end(), m)) continue;
          canon_gens.push_back(m);
          closure = subgroup_closure(g, canon_gens);
          if (closure.size() == canon.size()) break;
        }
        entries.push_back(Entry{std::move(canon), std::move(canon_gens)});
        return true;
      }
    } else {
      if (seen.count(raw_bits)) return false;
      seen.emplace(raw_bits, static_cast<std::uint32_t>(entries.size()));
    }
    entries.push_back(Entry{std::move(members), std::move(gens)});
    return true;
  };

  add({FiniteGroup::kIdentity}, {});
  for (std::uint32_t x = 1; x < n; ++x)
    add(subgroup_closure(g, {x}), {x});

  for (std::size_t head = 0; head < entries.size(); ++head) {
    if (entries.size() > opts.max_subgroups)
      throw CapExceeded("subgroup enumeration exceeded the cap");
    if (entries[head].members.size() == n) continue;
    std::vector<bool> in_set(n, false);
    for (auto m : entries[head].members) in_set[m] = true;
    // copy: entries may reallocate during the loop
    std::vector<std::uint32_t> gens = entries[head].gens;
    for (std::uint32_t x = 1; x < n; ++x) {
      if (in_set[x]) continue;
      auto extended = gens;
      extended.push_back(x);
      add(subgroup_closure(g, extended), std::move(extended));
    }
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  std::vector<Subgroup> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(Subgroup::unchecked(g, std::move(e.members)));
  return out;
}

MaximalMonolithicReport is_maximal_monolithic(const FiniteGroup& h,
                                              const std::vector<FiniteGroup>& candidates,
                                              std::uint64_t step_budget) {
  MonolithReport h_rep = monolith(h);
  if (!h_rep.is_monolithic) throw std::invalid_argument("H is not monolithic");

  MaximalMonolithicReport rep;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    const FiniteGroup& g = candidates[idx];
    if (g.order() <= h.order()) continue;
    MonolithReport g_rep = monolith(g);
    if (!g_rep.is_monolithic) {
      rep.skipped_non_monolithic.push_back(idx);
      continue;
    }
    auto target_mask = g_rep.monolith.member_mask();
    HomSearchOptions opts;
    opts.injective = true;
    opts.step_budget = step_budget;
    opts.accept = [&](const std::vector<std::uint32_t>& map) {
      for (auto m : h_rep.monolith.members())
        if (!target_mask[map[m]]) return false;
      return true;
    };
    HomSearchResult res = find_homomorphism(h, g, opts);
    if (res.status == HomSearchResult::Status::Exhausted) {
      rep.exhausted = true;
      return rep;
    }
    if (res.status == HomSearchResult::Status::Found) {
      rep.maximal = false;
      rep.violating_candidate = idx;
      rep.violating_embedding = res.hom;
      return rep;
    }
  }
  rep.maximal = true;
  return rep;
}

}  // namespace fgt
