#ifndef FGT_WORD_HPP
#define FGT_WORD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fgt/group.hpp"

namespace fgt {

/// Syntax error with a position into the offending text.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Abstract syntax of a group word: variables, products, integer powers and
/// left-normed commutators ([a,b,c] means [[a,b],c] with [a,b] = a^-1 b^-1 a b).
/// Mixed words additionally carry constant leaves (group elements). Nodes are
/// immutable and shared, so copies are cheap.
class Word {
public:
  enum class Kind { Variable, Constant, Product, Power, Commutator };

  Word() = default;

  static Word variable(std::string name);
  static Word constant(Permutation value);
  static Word product(std::vector<Word> children);  // one child collapses to the child
  static Word power(Word base, long long exponent);
  static Word commutator(std::vector<Word> children);  // at least two children

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }
  const Permutation& constant_value() const { return node_->value; }
  const std::vector<Word>& children() const { return node_->children; }
  const Word& base() const { return node_->children.front(); }
  long long exponent() const { return node_->exponent; }

  bool has_constants() const;
  /// Distinct variable names, sorted.
  std::vector<std::string> variables() const;

  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) { return equal(a, b); }

private:
  struct Node {
    Kind kind;
    std::string name;              // Variable
    Permutation value;             // Constant
    std::vector<Word> children;    // Product, Commutator, Power (single child)
    long long exponent = 0;        // Power
  };

  static bool equal(const Word& a, const Word& b);

  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the coefficient-free word grammar; "e" is reserved and rejected.
Word parse_word(const std::string& text);

/// Parses a mixed word: constants are "<cycles>" (at the degree of the
/// coefficient group), "e", or a bare "1", all meaning elements of that group.
Word parse_mixed_word(const std::string& text, const FiniteGroup& coefficient_group);

/// Capture-free substitution; variables absent from the map stay themselves.
/// A replacement power substituted directly under a power collapses, so
/// y -> y^3 turns y^2 into y^6.
Word substitute(const Word& w, const std::map<std::string, Word>& map);

/// Rewrites every commutator node to the opposite convention
/// [a,b] = a b a^-1 b^-1 (left-normed likewise), as plain products.
Word flip_commutators(const Word& w);

/// Value of the word at an assignment of group element indices.
std::uint32_t evaluate(const Word& w, const std::map<std::string, std::uint32_t>& assignment,
                       const FiniteGroup& g);

/// Tuple-scan variant: variable slots are fixed once, values change per tuple.
std::uint32_t evaluate_slots(const Word& w, const FiniteGroup& g,
                             const std::map<std::string, int>& slot_of,
                             const std::vector<std::uint32_t>& values);

}  // namespace fgt

#endif
