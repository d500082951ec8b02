#ifndef FGT_GROUP_HPP
#define FGT_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fgt/perm.hpp"

namespace fgt {

/// Construction limits. Exceeding either is a clean error, never truncation.
struct Caps {
  std::size_t max_elements = 200000;
  int max_degree = 64;
};

/// Raised when a closure or construction would exceed the element cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A fully enumerated permutation group. Elements are stored in strictly
/// increasing lexicographic order of their image sequences, so element
/// indices are canonical: index 0 is the identity and "least witness"
/// always means least index. Immutable after construction; cheap to copy.
class FiniteGroup {
public:
  FiniteGroup() = default;

  static FiniteGroup trivial(int degree = 1);

  /// Internal factory: elements must be closed, sorted and deduplicated.
  /// Not subject to the degree cap (quotient groups use large degrees).
  static FiniteGroup from_sorted_elements(int degree, std::vector<Permutation> elements,
                                          std::vector<Permutation> generators, std::string name);

  bool valid() const { return rep_ != nullptr; }
  int degree() const { return rep_->degree; }
  std::size_t order() const { return rep_->elements.size(); }
  const std::vector<Permutation>& elements() const { return rep_->elements; }
  const Permutation& element(std::uint32_t i) const { return rep_->elements[i]; }
  const std::vector<std::uint32_t>& generator_indices() const { return rep_->generator_indices; }
  std::vector<Permutation> generators() const;

  const std::string& name() const { return name_; }
  FiniteGroup with_name(std::string name) const;

  static constexpr std::uint32_t kIdentity = 0;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!rep_->cayley.empty()) return rep_->cayley[a * rep_->elements.size() + b];
    return mul_slow(a, b);
  }
  std::uint32_t inv(std::uint32_t a) const { return rep_->inverse[a]; }
  std::uint32_t power(std::uint32_t a, long long e) const;
  std::uint32_t conjugate(std::uint32_t g, std::uint32_t by) const {
    return mul(mul(inv(by), g), by);
  }
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const {
    return mul(mul(mul(inv(a), inv(b)), a), b);
  }

  int element_order(std::uint32_t i) const { return rep_->element_orders[i]; }
  bool is_abelian() const { return rep_->abelian; }
  long long exponent() const;

  std::optional<std::uint32_t> find(const Permutation& p) const;
  std::uint32_t index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  /// Content equality: same degree and same element list (names ignored).
  bool same_group(const FiniteGroup& other) const;

  /// True when both handles share one representation object.
  bool shares_rep(const FiniteGroup& other) const { return rep_ == other.rep_; }

  /// Greedy small generating sequence: repeatedly adds the element whose
  /// addition grows the closure most (ties broken by least index).
  std::vector<std::uint32_t> small_generating_set() const;

private:
  struct Rep {
    int degree = 0;
    std::vector<Permutation> elements;
    std::vector<std::uint32_t> generator_indices;
    std::vector<std::uint32_t> inverse;
    std::vector<int> element_orders;
    std::vector<std::uint32_t> cayley;  // row-major, built when order is small
    bool abelian = false;
  };

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  std::shared_ptr<const Rep> rep_;
  std::string name_;
};

/// Closure of the generators as a permutation group; empty generator list
/// yields the trivial group of the given degree. Canonical element order.
FiniteGroup generate(int degree, const std::vector<Permutation>& gens, const Caps& caps = {},
                     std::string name = "");

/// G x H on degree(G)+degree(H) points, both factors acting on their block.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Caps& caps = {});

/// Indices of the subgroup generated by the given element indices (sorted).
std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g,
                                            const std::vector<std::uint32_t>& seed);

}  // namespace fgt

#endif
