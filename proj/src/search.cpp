#include "fgt/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgt {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

struct Level {
  std::uint32_t gen = 0;                   // domain index of this generator
  std::vector<std::uint32_t> new_elements; // discovery order, closure_k \ closure_{k-1}
  // definition of each new element: new_elements[i] = def_parent[i] * gen_seq[def_gen[i]]
  std::vector<std::uint32_t> def_parent;
  std::vector<std::uint32_t> def_gen;
  std::size_t closure_size = 0;            // |closure after this level|
};

std::vector<std::uint32_t> centralizer_orders(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> out(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t c = 0;
    for (std::uint32_t y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++c;
    out[x] = c;
  }
  return out;
}

class Searcher {
public:
  Searcher(const FiniteGroup& domain, const FiniteGroup& codomain, const HomSearchOptions& opts)
      : dom_(domain), cod_(codomain), opts_(opts) {
    build_levels();
    map_.assign(dom_.order(), kUnset);
    map_[FiniteGroup::kIdentity] = FiniteGroup::kIdentity;
    if (opts_.injective) {
      dom_cent_ = centralizer_orders(dom_);
      cod_cent_ = centralizer_orders(cod_);
      used_.assign(cod_.order(), false);
      used_[FiniteGroup::kIdentity] = true;
    }
    images_.assign(levels_.size(), 0);
  }

  HomSearchResult run() {
    HomSearchResult res;
    if (opts_.injective && dom_.order() > cod_.order()) {
      res.status = HomSearchResult::Status::Absent;
      return res;
    }
    bool exhausted_budget = false;
    bool found = descend(0, exhausted_budget);
    res.steps = steps_;
    if (found) {
      res.status = HomSearchResult::Status::Found;
      res.hom = Homomorphism::from_full_map(dom_, cod_, map_);
    } else {
      res.status = exhausted_budget ? HomSearchResult::Status::Exhausted
                                    : HomSearchResult::Status::Absent;
    }
    return res;
  }

private:
  void build_levels() {
    if (opts_.forced_domain.size() != opts_.forced_images.size())
      throw std::invalid_argument("forced prefix size mismatch");
    std::vector<std::uint32_t> gen_seq = opts_.forced_domain;
    std::vector<std::uint32_t> closure = subgroup_closure(dom_, gen_seq);
    // greedy extension to a full generating sequence
    while (closure.size() < dom_.order()) {
      std::vector<bool> mask(dom_.order(), false);
      for (auto i : closure) mask[i] = true;
      std::uint32_t best = 0;
      std::size_t best_size = 0;
      for (std::uint32_t cand = 1; cand < dom_.order(); ++cand) {
        if (mask[cand]) continue;
        auto trial = gen_seq;
        trial.push_back(cand);
        std::size_t sz = subgroup_closure(dom_, trial).size();
        if (sz > best_size) {
          best_size = sz;
          best = cand;
        }
        if (sz == dom_.order()) break;
      }
      gen_seq.push_back(best);
      closure = subgroup_closure(dom_, gen_seq);
    }

    // per-level discovery chains
    std::vector<bool> known(dom_.order(), false);
    known[FiniteGroup::kIdentity] = true;
    std::vector<std::uint32_t> known_list = {FiniteGroup::kIdentity};
    for (std::size_t k = 0; k < gen_seq.size(); ++k) {
      Level lev;
      lev.gen = gen_seq[k];
      // BFS over known_list and the new elements, multiplying by gens 0..k
      std::size_t scan = 0;
      std::vector<std::uint32_t> frontier = known_list;
      while (scan < frontier.size()) {
        std::uint32_t x = frontier[scan++];
        for (std::size_t i = 0; i <= k; ++i) {
          std::uint32_t y = dom_.mul(x, gen_seq[i]);
          if (!known[y]) {
            known[y] = true;
            lev.new_elements.push_back(y);
            lev.def_parent.push_back(x);
            lev.def_gen.push_back(static_cast<std::uint32_t>(i));
            frontier.push_back(y);
          }
        }
      }
      known_list = frontier;
      lev.closure_size = known_list.size();
      levels_.push_back(std::move(lev));
      closure_members_.push_back(known_list);
    }
  }

  bool candidate_ok(std::size_t k, std::uint32_t cand) const {
    int dord = dom_.element_order(levels_[k].gen);
    int cord = cod_.element_order(cand);
    if (opts_.injective) {
      if (cord != dord) return false;
      if (cod_cent_[cand] % dom_cent_[levels_[k].gen] != 0) return false;
    } else {
      if (dord % cord != 0) return false;
    }
    return true;
  }

  /// Assigns images of level-k new elements from their definitions, then
  /// checks multiplicativity of the partial map against all gens <= k.
  bool extend_and_check(std::size_t k) {
    const Level& lev = levels_[k];
    for (std::size_t i = 0; i < lev.new_elements.size(); ++i) {
      std::uint32_t img =
          cod_.mul(map_[lev.def_parent[i]], images_[lev.def_gen[i]]);
      map_[lev.new_elements[i]] = img;
    }
    if (opts_.injective) {
      bool ok = true;
      std::size_t marked = 0;
      for (auto e : lev.new_elements) {
        if (used_[map_[e]]) {
          ok = false;
          break;
        }
        used_[map_[e]] = true;
        ++marked;
      }
      // roll back marks on failure (keep them on success; undone in retract())
      if (!ok) {
        for (std::size_t i = 0; i < marked; ++i) used_[map_[lev.new_elements[i]]] = false;
        return false;
      }
    }
    for (auto x : closure_members_[k])
      for (std::size_t i = 0; i <= k; ++i)
        if (map_[dom_.mul(x, levels_[i].gen)] != cod_.mul(map_[x], images_[i])) {
          if (opts_.injective)
            for (auto e : lev.new_elements) used_[map_[e]] = false;
          return false;
        }
    return true;
  }

  void retract(std::size_t k) {
    for (auto e : levels_[k].new_elements) {
      if (opts_.injective) used_[map_[e]] = false;
      map_[e] = kUnset;
    }
  }

  bool descend(std::size_t k, bool& exhausted) {
    if (k == levels_.size()) {
      if (!opts_.accept || opts_.accept(map_)) return true;
      return false;
    }
    const bool restricted = !opts_.allowed_images.empty() && k >= opts_.forced_domain.size();
    const std::size_t cand_count = restricted ? opts_.allowed_images.size() : cod_.order();
    const bool forced = k < opts_.forced_domain.size();
    for (std::size_t ci = 0; ci < (forced ? 1 : cand_count); ++ci) {
      std::uint32_t cand;
      if (forced)
        cand = opts_.forced_images[k];
      else
        cand = restricted ? opts_.allowed_images[ci] : static_cast<std::uint32_t>(ci);
      if (++steps_ > opts_.step_budget) {
        exhausted = true;
        return false;
      }
      if (!forced && !candidate_ok(k, cand)) continue;
      images_[k] = cand;
      if (extend_and_check(k)) {
        if (descend(k + 1, exhausted)) return true;
        retract(k);
      }
      if (exhausted) return false;
    }
    return false;
  }

  const FiniteGroup& dom_;
  const FiniteGroup& cod_;
  const HomSearchOptions& opts_;
  std::vector<Level> levels_;
  std::vector<std::vector<std::uint32_t>> closure_members_;
  std::vector<std::uint32_t> map_;
  std::vector<std::uint32_t> images_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> dom_cent_, cod_cent_;
  std::uint64_t steps_ = 0;
};

}  // namespace

HomSearchResult find_homomorphism(const FiniteGroup& domain, const FiniteGroup& codomain,
                                  const HomSearchOptions& opts) {
  Searcher s(domain, codomain, opts);
  return s.run();
}

HomSearchResult find_monomorphism(const FiniteGroup& domain, const FiniteGroup& codomain,
                                  std::uint64_t step_budget) {
  HomSearchOptions opts;
  opts.injective = true;
  opts.step_budget = step_budget;
  return find_homomorphism(domain, codomain, opts);
}

}  // namespace fgt
