#ifndef FGT_LAW_HPP
#define FGT_LAW_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgt/group.hpp"
#include "fgt/word.hpp"

namespace fgt {

/// A group identity: lhs = 1 for every assignment of its variables.
struct Law {
  Word lhs;
  std::string name;

  std::string display() const { return lhs.to_string() + " = 1"; }
};

/// A named finite set of laws; a group lies in the described variety
/// (at this finite scale) iff it satisfies every law in the set.
struct LawSet {
  std::string name;
  std::vector<Law> laws;
};

struct LawCheckResult {
  enum class Status { Holds, Fails, Exhausted };
  Status status = Status::Holds;

  /// Canonical least violating assignment (full, unreduced tuple order).
  std::map<std::string, Permutation> counterexample;

  /// Size of the full assignment space |G|^vars certified by the scan.
  std::uint64_t assignments_total = 0;
  /// Word evaluations actually performed (class-reduced scan).
  std::uint64_t evaluations = 0;

  bool holds() const { return status == Status::Holds; }
};

/// Exhaustive law check. The first variable ranges over conjugacy class
/// representatives only; this is sound because w(g x1 g^-1, ..., g xn g^-1)
/// = g w(x1,...,xn) g^-1, and it still yields the canonical least
/// counterexample because class representatives are class minima.
LawCheckResult holds_law(const FiniteGroup& g, const Law& law,
                         std::uint64_t eval_budget = 100'000'000);

struct LawSetCheckResult {
  LawCheckResult::Status status = LawCheckResult::Status::Holds;
  std::optional<std::size_t> failing_index;
  LawCheckResult failing_result;
  std::uint64_t evaluations = 0;

  bool holds() const { return status == LawCheckResult::Status::Holds; }
};

LawSetCheckResult holds_law_set(const FiniteGroup& g, const LawSet& ls,
                                std::uint64_t eval_budget = 100'000'000);

/// word "=" "1".
Law parse_law(const std::string& text, std::string name = "");

/// The three S4 laws: x^12 = 1, (x^3 y^3)^4 [x^3, y^6]^3 = 1,
/// [[x, y]^3, y^3, y^2] = 1.
LawSet s4_laws();

/// x^4 = 1 and [x^2, y] = 1 (the variety generated by the dihedral group of
/// order eight, equivalently by the quaternion group).
LawSet dihedral8_variety_laws();

/// x^4 = 1 and (x y)^4 [x, y^2]^3 = 1 (what the S4 laws force on 2-groups).
LawSet two_group_descent_laws();

/// x^n = 1 and [x, y] = 1: abelian groups of exponent n.
LawSet abelian_exponent_laws(long long n);

}  // namespace fgt

#endif
