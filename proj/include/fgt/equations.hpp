#ifndef FGT_EQUATIONS_HPP
#define FGT_EQUATIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgt/group.hpp"
#include "fgt/subgroup.hpp"
#include "fgt/word.hpp"

namespace fgt {

struct Equation {
  Word lhs;
  Word rhs;

  std::string display() const { return lhs.to_string() + " = " + rhs.to_string(); }
};

/// A finite system of equations with coefficients in a declared group.
/// Variables are listed in first-occurrence order; solution tuples are
/// compared lexicographically along that order.
struct EquationSystem {
  std::vector<Equation> equations;
  FiniteGroup coefficient_group;
  std::vector<std::string> variables;

  /// Equations separated by ';' or newlines; constants are "<cycles>", "e"
  /// or "1" at the degree of the coefficient group.
  static EquationSystem parse(const std::string& text, const FiniteGroup& coefficient_group);

  static EquationSystem from_equations(std::vector<Equation> eqs, FiniteGroup coefficient_group);

  std::string display() const;
};

struct SolveOutcome {
  enum class Kind { Solution, NoSolution, Exhausted };
  Kind kind = Kind::NoSolution;
  std::map<std::string, Permutation> assignment;  // set when kind == Solution
  std::uint64_t evaluations = 0;

  bool solved() const { return kind == Kind::Solution; }
};

/// Exhaustive scan of G^vars in canonical tuple order; the returned solution
/// is the least satisfying tuple. NoSolution is only reported after the whole
/// space was scanned; running out of budget yields Exhausted. The budget
/// counts single equation evaluations.
SolveOutcome solve(const EquationSystem& sys, const FiniteGroup& g,
                   std::uint64_t eval_budget = 100'000'000);

/// Same scan with the tuple components restricted to members of h
/// (evaluation still happens in the parent group).
SolveOutcome solve_in_subgroup(const EquationSystem& sys, const Subgroup& h,
                               std::uint64_t eval_budget = 100'000'000);

struct WordImage {
  std::vector<std::uint32_t> values;  // sorted element indices
  bool complete = true;
  std::uint64_t evaluations = 0;

  bool contains(std::uint32_t v) const;
};

/// The exact value set {w(g1,...,gk)} over all assignments in g.
WordImage word_image(const Word& w, const FiniteGroup& g, std::uint64_t eval_budget = 100'000'000);

/// Value set with assignments drawn from the subgroup's members.
WordImage word_image_in_subgroup(const Word& w, const Subgroup& h,
                                 std::uint64_t eval_budget = 100'000'000);

struct VerbalAudit {
  /// Outcome within the stated bounds; a passing audit is a bounded
  /// statement, not a proof.
  bool verbally_closed = true;
  bool exhausted = false;
  std::optional<Word> witness_word;
  std::optional<Permutation> witness_target;
  int max_word_length = 0;
  int max_variables = 0;
  std::size_t words_checked = 0;
  std::uint64_t evaluations = 0;
};

/// Bounded audit of the definition: enumerates coefficient-free words w up to
/// the given reduced length and variable count, and reports the first (w, h)
/// with h in H such that w = h is solvable in G but not in H. Word classes
/// equivalent under inversion, per-variable inversion and variable renaming
/// are tested once (all three symmetries preserve the value sets in G and H).
VerbalAudit is_verbally_closed(const FiniteGroup& g, const Subgroup& h, int max_word_length,
                               int max_variables, std::uint64_t eval_budget = 100'000'000);

struct AlgebraicAudit {
  bool closed = true;
  bool exhausted = false;
  std::optional<std::size_t> violating_index;
  std::string violating_system;
  std::map<std::string, Permutation> g_solution;
  std::size_t systems_checked = 0;
  std::uint64_t evaluations = 0;
};

/// For each sampled system (coefficients must lie in h): if it is solvable
/// in g, checks that it is solvable in h; reports the first violation.
AlgebraicAudit is_algebraically_closed_sample(const FiniteGroup& g, const Subgroup& h,
                                              const std::vector<EquationSystem>& systems,
                                              std::uint64_t eval_budget = 100'000'000);

}  // namespace fgt

#endif
