#include "fgt/law.hpp"

#include <cctype>
#include <stdexcept>

#include "fgt/group_ops.hpp"

namespace fgt {

LawCheckResult holds_law(const FiniteGroup& g, const Law& law, std::uint64_t eval_budget) {
  if (law.lhs.has_constants()) throw std::invalid_argument("laws must be coefficient-free");
  LawCheckResult res;
  const std::vector<std::string> vars = law.lhs.variables();
  const std::size_t k = vars.size();
  const std::size_t n = g.order();

  res.assignments_total = 1;
  for (std::size_t i = 0; i < k; ++i) res.assignments_total *= n;

  std::map<std::string, int> slots;
  for (std::size_t i = 0; i < k; ++i) slots[vars[i]] = static_cast<int>(i);

  if (k == 0) {
    res.evaluations = 1;
    std::uint32_t v = evaluate_slots(law.lhs, g, slots, {});
    res.status = v == FiniteGroup::kIdentity ? LawCheckResult::Status::Holds
                                             : LawCheckResult::Status::Fails;
    return res;
  }

  const std::vector<std::uint32_t> reps = conjugacy_classes(g).representatives();

  auto advance_tail = [&](std::vector<std::uint32_t>& values) {
    for (std::size_t pos = k; pos-- > 1;) {
      if (++values[pos] < n) return true;
      values[pos] = 0;
    }
    return false;
  };

  std::vector<std::uint32_t> values(k, 0);
  for (std::uint32_t rep : reps) {
    values.assign(k, 0);
    values[0] = rep;
    do {
      if (res.evaluations >= eval_budget) {
        res.status = LawCheckResult::Status::Exhausted;
        return res;
      }
      ++res.evaluations;
      if (evaluate_slots(law.lhs, g, slots, values) != FiniteGroup::kIdentity) {
        res.status = LawCheckResult::Status::Fails;
        for (std::size_t i = 0; i < k; ++i) res.counterexample[vars[i]] = g.element(values[i]);
        return res;
      }
    } while (advance_tail(values));
  }
  res.status = LawCheckResult::Status::Holds;
  return res;
}

LawSetCheckResult holds_law_set(const FiniteGroup& g, const LawSet& ls,
                                std::uint64_t eval_budget) {
  LawSetCheckResult out;
  for (std::size_t i = 0; i < ls.laws.size(); ++i) {
    std::uint64_t remaining = eval_budget - out.evaluations;
    LawCheckResult r = holds_law(g, ls.laws[i], remaining);
    out.evaluations += r.evaluations;
    if (r.status != LawCheckResult::Status::Holds) {
      out.status = r.status;
      out.failing_index = i;
      out.failing_result = std::move(r);
      return out;
    }
  }
  out.status = LawCheckResult::Status::Holds;
  return out;
}

Law parse_law(const std::string& text, std::string name) {
  auto eq = text.rfind('=');
  if (eq == std::string::npos) throw ParseError("law must have the form: word = 1", 0);
  std::string rhs = text.substr(eq + 1);
  std::size_t i = 0;
  while (i < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[i]))) ++i;
  if (i >= rhs.size() || rhs[i] != '1') throw ParseError("law right side must be 1", eq + 1);
  ++i;
  while (i < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[i]))) ++i;
  if (i != rhs.size()) throw ParseError("trailing input after law", eq + 1 + i);
  Law law;
  law.lhs = parse_word(text.substr(0, eq));
  law.name = std::move(name);
  return law;
}

LawSet s4_laws() {
  LawSet ls;
  ls.name = "S4-laws";
  ls.laws.push_back(parse_law("x^12 = 1", "x^12"));
  ls.laws.push_back(
      parse_law("((x^3 y^3)^4 [x^3, y^6]^3)^3 = 1", "((x^3 y^3)^4 [x^3,y^6]^3)^3"));
  ls.laws.push_back(parse_law("[[x, y]^3, y^3, y^2] = 1", "[[x,y]^3,y^3,y^2]"));
  return ls;
}

LawSet dihedral8_variety_laws() {
  LawSet ls;
  ls.name = "D";
  ls.laws.push_back(parse_law("x^4 = 1", "x^4"));
  ls.laws.push_back(parse_law("[x^2, y] = 1", "[x^2,y]"));
  return ls;
}

LawSet two_group_descent_laws() {
  LawSet ls;
  ls.name = "two-group-descent";
  ls.laws.push_back(parse_law("x^4 = 1", "x^4"));
  ls.laws.push_back(parse_law("((x y)^4 [x, y^2]^3)^3 = 1", "((x y)^4 [x,y^2]^3)^3"));
  return ls;
}

LawSet abelian_exponent_laws(long long n) {
  LawSet ls;
  ls.name = "A" + std::to_string(n);
  ls.laws.push_back(parse_law("x^" + std::to_string(n) + " = 1", "x^" + std::to_string(n)));
  ls.laws.push_back(parse_law("[x, y] = 1", "[x,y]"));
  return ls;
}

}  // namespace fgt
