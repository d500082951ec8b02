#include "fgt/equations.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgt {

namespace {

void collect_vars_in_order(const Word& w, std::vector<std::string>& order,
                           std::set<std::string>& seen) {
  switch (w.kind()) {
    case Word::Kind::Variable:
      if (seen.insert(w.var_name()).second) order.push_back(w.var_name());
      break;
    case Word::Kind::Constant: break;
    default:
      for (const auto& c : w.children()) collect_vars_in_order(c, order, seen);
  }
}

void collect_constants(const Word& w, std::vector<Permutation>& out) {
  switch (w.kind()) {
    case Word::Kind::Variable: break;
    case Word::Kind::Constant: out.push_back(w.constant_value()); break;
    default:
      for (const auto& c : w.children()) collect_constants(c, out);
  }
}

void validate_coefficients(const EquationSystem& sys, const FiniteGroup& g) {
  std::vector<Permutation> consts;
  for (const auto& eq : sys.equations) {
    collect_constants(eq.lhs, consts);
    collect_constants(eq.rhs, consts);
  }
  for (const auto& p : consts) {
    if (p.degree() != g.degree() || !g.contains(p))
      throw std::invalid_argument("coefficient " + p.cycle_string() + " not in the solving group");
  }
}

SolveOutcome scan_tuples(const EquationSystem& sys, const FiniteGroup& g,
                         const std::vector<std::uint32_t>& domain, std::uint64_t eval_budget) {
  SolveOutcome out;
  const std::size_t k = sys.variables.size();
  std::map<std::string, int> slots;
  for (std::size_t i = 0; i < k; ++i) slots[sys.variables[i]] = static_cast<int>(i);

  std::vector<std::uint32_t> pos(k, 0);
  std::vector<std::uint32_t> values(k, domain.empty() ? 0 : domain.front());

  auto advance = [&]() {
    for (std::size_t i = k; i-- > 0;) {
      if (++pos[i] < domain.size()) {
        values[i] = domain[pos[i]];
        return true;
      }
      pos[i] = 0;
      values[i] = domain.front();
    }
    return false;
  };

  do {
    bool all_hold = true;
    for (const auto& eq : sys.equations) {
      if (out.evaluations >= eval_budget) {
        out.kind = SolveOutcome::Kind::Exhausted;
        return out;
      }
      ++out.evaluations;
      if (evaluate_slots(eq.lhs, g, slots, values) != evaluate_slots(eq.rhs, g, slots, values)) {
        all_hold = false;
        break;
      }
    }
    if (all_hold) {
      out.kind = SolveOutcome::Kind::Solution;
      for (std::size_t i = 0; i < k; ++i) out.assignment[sys.variables[i]] = g.element(values[i]);
      return out;
    }
  } while (k > 0 && advance());

  out.kind = SolveOutcome::Kind::NoSolution;
  return out;
}

}  // namespace

EquationSystem EquationSystem::parse(const std::string& text,
                                     const FiniteGroup& coefficient_group) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';' || c == '\n') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  std::vector<Equation> eqs;
  for (const auto& part : parts) {
    bool blank = true;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    auto eq_pos = part.find('=');
    if (eq_pos == std::string::npos)
      throw ParseError("equation must have the form: word = word", 0);
    Equation eq;
    eq.lhs = parse_mixed_word(part.substr(0, eq_pos), coefficient_group);
    eq.rhs = parse_mixed_word(part.substr(eq_pos + 1), coefficient_group);
    eqs.push_back(std::move(eq));
  }
  if (eqs.empty()) throw ParseError("empty equation system", 0);
  return from_equations(std::move(eqs), coefficient_group);
}

EquationSystem EquationSystem::from_equations(std::vector<Equation> eqs,
                                              FiniteGroup coefficient_group) {
  EquationSystem sys;
  sys.equations = std::move(eqs);
  sys.coefficient_group = std::move(coefficient_group);
  std::set<std::string> seen;
  for (const auto& eq : sys.equations) {
    collect_vars_in_order(eq.lhs, sys.variables, seen);
    collect_vars_in_order(eq.rhs, sys.variables, seen);
  }
  return sys;
}

std::string EquationSystem::display() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& eq : equations) {
    if (!first) out << "; ";
    first = false;
    out << eq.display();
  }
  return out.str();
}

SolveOutcome solve(const EquationSystem& sys, const FiniteGroup& g, std::uint64_t eval_budget) {
  validate_coefficients(sys, g);
  std::vector<std::uint32_t> domain(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) domain[i] = static_cast<std::uint32_t>(i);
  return scan_tuples(sys, g, domain, eval_budget);
}

SolveOutcome solve_in_subgroup(const EquationSystem& sys, const Subgroup& h,
                               std::uint64_t eval_budget) {
  validate_coefficients(sys, h.parent());
  return scan_tuples(sys, h.parent(), h.members(), eval_budget);
}

bool WordImage::contains(std::uint32_t v) const {
  return std::binary_search(values.begin(), values.end(), v);
}

namespace {

WordImage image_over(const Word& w, const FiniteGroup& g, const std::vector<std::uint32_t>& domain,
                     std::uint64_t eval_budget) {
  WordImage out;
  const std::vector<std::string> vars = w.variables();
  const std::size_t k = vars.size();
  std::map<std::string, int> slots;
  for (std::size_t i = 0; i < k; ++i) slots[vars[i]] = static_cast<int>(i);

  std::vector<bool> hit(g.order(), false);
  std::vector<std::uint32_t> pos(k, 0);
  std::vector<std::uint32_t> values(k, domain.empty() ? 0 : domain.front());

  auto advance = [&]() {
    for (std::size_t i = k; i-- > 0;) {
      if (++pos[i] < domain.size()) {
        values[i] = domain[pos[i]];
        return true;
      }
      pos[i] = 0;
      values[i] = domain.front();
    }
    return false;
  };

  do {
    if (out.evaluations >= eval_budget) {
      out.complete = false;
      break;
    }
    ++out.evaluations;
    hit[evaluate_slots(w, g, slots, values)] = true;
  } while (k > 0 && advance());

  for (std::uint32_t i = 0; i < g.order(); ++i)
    if (hit[i]) out.values.push_back(i);
  return out;
}

}  // namespace

WordImage word_image(const Word& w, const FiniteGroup& g, std::uint64_t eval_budget) {
  std::vector<std::uint32_t> domain(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) domain[i] = static_cast<std::uint32_t>(i);
  return image_over(w, g, domain, eval_budget);
}

WordImage word_image_in_subgroup(const Word& w, const Subgroup& h, std::uint64_t eval_budget) {
  return image_over(w, h.parent(), h.members(), eval_budget);
}

// ------------------------------------------------------------- word audit

namespace {

// Symbols encode x, x^-1, y, y^-1, ... as 0,1,2,3,...; inv(s) = s ^ 1.
using SymbolWord = std::vector<int>;

const char* kVarNames[] = {"x", "y", "z", "u", "v", "w"};

std::string audit_var_name(int v) {
  if (v < 6) return kVarNames[v];
  return "x" + std::to_string(v + 1);
}

/// Relabels variables in first-use order and flips signs so that each
/// variable's first occurrence is positive.
SymbolWord canonicalize(const SymbolWord& w) {
  std::vector<int> var_map(16, -1);
  std::vector<int> flip(16, 0);
  int next = 0;
  SymbolWord out;
  out.reserve(w.size());
  for (int s : w) {
    int v = s / 2;
    if (var_map[v] < 0) {
      var_map[v] = next++;
      flip[v] = s % 2;  // flip when first seen inverted
    }
    int sign = (s % 2) ^ flip[v];
    out.push_back(var_map[v] * 2 + sign);
  }
  return out;
}

SymbolWord inverse_word(const SymbolWord& w) {
  SymbolWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(*it ^ 1);
  return out;
}

/// AST for the class, preferring the commutator form when the class contains
/// one: sign-flip variants of a length-4 two-variable word are scanned for
/// the pattern a^-1 b^-1 a b.
Word presented_ast(const SymbolWord& w, int var_count) {
  if (w.size() == 4 && var_count == 2) {
    for (int mask = 0; mask < 4; ++mask) {
      SymbolWord v = w;
      for (int& s : v)
        if (mask & (1 << (s / 2))) s ^= 1;
      if (v[0] == 1 && v[1] == 3 && v[2] == 0 && v[3] == 2)
        return Word::commutator({Word::variable(audit_var_name(0)),
                                 Word::variable(audit_var_name(1))});
    }
  }
  std::vector<Word> factors;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long count = static_cast<long long>(j - i);
    long long exp = (w[i] % 2 == 0) ? count : -count;
    Word var = Word::variable(audit_var_name(w[i] / 2));
    factors.push_back(exp == 1 ? var : Word::power(var, exp));
    i = j;
  }
  return Word::product(std::move(factors));
}

/// Enumerates canonical word-class representatives in the audit order:
/// variable count, then reduced length, then lexicographic on symbols.
template <typename Fn>
void enumerate_word_classes(int max_vars, int max_len, Fn&& visit) {
  for (int vc = 1; vc <= max_vars; ++vc) {
    for (int len = vc; len <= max_len; ++len) {
      SymbolWord w;
      int used = 0;
      auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == len) {
          if (used != vc) return true;
          if (w.front() == (w.back() ^ 1)) return true;  // not cyclically reduced
          SymbolWord inv_canon = canonicalize(inverse_word(w));
          if (inv_canon < w) return true;  // class already seen via its inverse
          return visit(w, vc);
        }
        int limit = std::min(used, vc - 1);  // may reuse a var or introduce the next
        for (int v = 0; v <= limit; ++v) {
          for (int sign = 0; sign < 2; ++sign) {
            if (v == used && sign == 1) continue;  // first occurrence positive
            int s = v * 2 + sign;
            if (depth > 0 && s == (w.back() ^ 1)) continue;  // free reduction
            w.push_back(s);
            int prev_used = used;
            if (v == used) ++used;
            bool cont = self(self, depth + 1);
            used = prev_used;
            w.pop_back();
            if (!cont) return false;
          }
        }
        return true;
      };
      if (!rec(rec, 0)) return;
    }
  }
}

}  // namespace

VerbalAudit is_verbally_closed(const FiniteGroup& g, const Subgroup& h, int max_word_length,
                               int max_variables, std::uint64_t eval_budget) {
  if (!h.parent().same_group(g)) throw std::invalid_argument("subgroup of a different group");
  VerbalAudit audit;
  audit.max_word_length = max_word_length;
  audit.max_variables = max_variables;

  enumerate_word_classes(max_variables, max_word_length, [&](const SymbolWord& sw, int vc) {
    Word w = presented_ast(sw, vc);
    std::uint64_t remaining =
        eval_budget > audit.evaluations ? eval_budget - audit.evaluations : 0;
    WordImage img_g = word_image(w, g, remaining);
    audit.evaluations += img_g.evaluations;
    remaining = eval_budget > audit.evaluations ? eval_budget - audit.evaluations : 0;
    WordImage img_h = word_image_in_subgroup(w, h, remaining);
    audit.evaluations += img_h.evaluations;
    if (!img_g.complete || !img_h.complete) {
      audit.exhausted = true;
      return false;
    }
    ++audit.words_checked;
    for (auto target : h.members()) {
      if (img_g.contains(target) && !img_h.contains(target)) {
        audit.verbally_closed = false;
        audit.witness_word = w;
        audit.witness_target = g.element(target);
        return false;
      }
    }
    return true;
  });
  return audit;
}

AlgebraicAudit is_algebraically_closed_sample(const FiniteGroup& g, const Subgroup& h,
                                              const std::vector<EquationSystem>& systems,
                                              std::uint64_t eval_budget) {
  if (!h.parent().same_group(g)) throw std::invalid_argument("subgroup of a different group");
  AlgebraicAudit audit;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto& sys = systems[i];
    {
      std::vector<Permutation> consts;
      for (const auto& eq : sys.equations) {
        collect_constants(eq.lhs, consts);
        collect_constants(eq.rhs, consts);
      }
      for (const auto& p : consts)
        if (!h.contains_index(g.index_of(pad_to_degree(p, g.degree()))))
          throw std::invalid_argument("system coefficient lies outside the subgroup");
    }
    std::uint64_t remaining = eval_budget > audit.evaluations ? eval_budget - audit.evaluations : 0;
    SolveOutcome in_g = solve(sys, g, remaining);
    audit.evaluations += in_g.evaluations;
    if (in_g.kind == SolveOutcome::Kind::Exhausted) {
      audit.exhausted = true;
      return audit;
    }
    if (in_g.kind == SolveOutcome::Kind::Solution) {
      remaining = eval_budget > audit.evaluations ? eval_budget - audit.evaluations : 0;
      SolveOutcome in_h = solve_in_subgroup(sys, h, remaining);
      audit.evaluations += in_h.evaluations;
      if (in_h.kind == SolveOutcome::Kind::Exhausted) {
        audit.exhausted = true;
        return audit;
      }
      if (in_h.kind == SolveOutcome::Kind::NoSolution) {
        audit.closed = false;
        audit.violating_index = i;
        audit.violating_system = sys.display();
        audit.g_solution = in_g.assignment;
        return audit;
      }
    }
    ++audit.systems_checked;
  }
  return audit;
}

}  // namespace fgt
