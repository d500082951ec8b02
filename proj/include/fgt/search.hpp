#ifndef FGT_SEARCH_HPP
#define FGT_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fgt/group.hpp"
#include "fgt/hom.hpp"

namespace fgt {

/// Options for the generator-image backtracking search. The engine fixes a
/// deterministic generating sequence of the domain (any forced prefix first,
/// then greedy extension), tries candidate images in ascending index order
/// and extends/validates the partial map level by level, so the first hit is
/// the canonical least homomorphism in image-tuple order.
struct HomSearchOptions {
  bool injective = false;

  /// Candidate images for non-forced generators; empty means all of codomain.
  std::vector<std::uint32_t> allowed_images;

  /// Forced prefix of the generating sequence (domain indices) and images.
  std::vector<std::uint32_t> forced_domain;
  std::vector<std::uint32_t> forced_images;

  /// Extension-step budget; one step per candidate image trial.
  std::uint64_t step_budget = 10'000'000;

  /// Completed maps are reported only when this returns true (default: all).
  std::function<bool(const std::vector<std::uint32_t>&)> accept;
};

struct HomSearchResult {
  enum class Status { Found, Absent, Exhausted };
  Status status = Status::Absent;
  std::optional<Homomorphism> hom;
  std::uint64_t steps = 0;
};

HomSearchResult find_homomorphism(const FiniteGroup& domain, const FiniteGroup& codomain,
                                  const HomSearchOptions& opts = {});

/// Convenience wrapper: injective homomorphism search.
HomSearchResult find_monomorphism(const FiniteGroup& domain, const FiniteGroup& codomain,
                                  std::uint64_t step_budget = 10'000'000);

}  // namespace fgt

#endif
