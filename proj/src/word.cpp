#include "fgt/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fgt {

Word Word::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return Word(std::move(n));
}

Word Word::constant(Permutation value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = std::move(value);
  return Word(std::move(n));
}

Word Word::product(std::vector<Word> children) {
  if (children.empty()) throw std::invalid_argument("product needs at least one factor");
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = std::move(children);
  return Word(std::move(n));
}

Word Word::power(Word base, long long exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->children.push_back(std::move(base));
  n->exponent = exponent;
  return Word(std::move(n));
}

Word Word::commutator(std::vector<Word> children) {
  if (children.size() < 2) throw std::invalid_argument("commutator needs at least two arguments");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Commutator;
  n->children = std::move(children);
  return Word(std::move(n));
}

bool Word::has_constants() const {
  switch (node_->kind) {
    case Kind::Constant: return true;
    case Kind::Variable: return false;
    default:
      for (const auto& c : node_->children)
        if (c.has_constants()) return true;
      return false;
  }
}

namespace {

void collect_vars(const Word& w, std::set<std::string>& out) {
  switch (w.kind()) {
    case Word::Kind::Variable: out.insert(w.var_name()); break;
    case Word::Kind::Constant: break;
    default:
      for (const auto& c : w.children()) collect_vars(c, out);
  }
}

}  // namespace

std::vector<std::string> Word::variables() const {
  std::set<std::string> s;
  collect_vars(*this, s);
  return {s.begin(), s.end()};
}

bool Word::equal(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Kind::Variable: return a.node_->name == b.node_->name;
    case Kind::Constant: return a.node_->value == b.node_->value;
    case Kind::Power:
      return a.node_->exponent == b.node_->exponent &&
             equal(a.node_->children[0], b.node_->children[0]);
    case Kind::Product:
    case Kind::Commutator: {
      if (a.node_->children.size() != b.node_->children.size()) return false;
      for (std::size_t i = 0; i < a.node_->children.size(); ++i)
        if (!equal(a.node_->children[i], b.node_->children[i])) return false;
      return true;
    }
  }
  return false;
}

namespace {

// ---------------------------------------------------------------- printing

bool needs_parens_as_power_base(const Word& w) {
  return w.kind() == Word::Kind::Product || w.kind() == Word::Kind::Power;
}

bool needs_parens_as_factor(const Word& w) { return w.kind() == Word::Kind::Product; }

void print_word(const Word& w, std::ostream& out) {
  switch (w.kind()) {
    case Word::Kind::Variable: out << w.var_name(); break;
    case Word::Kind::Constant:
      if (w.constant_value().is_identity())
        out << 'e';
      else
        out << '<' << w.constant_value().cycle_string() << '>';
      break;
    case Word::Kind::Power: {
      const Word& b = w.base();
      if (needs_parens_as_power_base(b)) {
        out << '(';
        print_word(b, out);
        out << ')';
      } else {
        print_word(b, out);
      }
      out << '^' << w.exponent();
      break;
    }
    case Word::Kind::Product: {
      bool first = true;
      for (const auto& c : w.children()) {
        if (!first) out << ' ';
        first = false;
        if (needs_parens_as_factor(c)) {
          out << '(';
          print_word(c, out);
          out << ')';
        } else {
          print_word(c, out);
        }
      }
      break;
    }
    case Word::Kind::Commutator: {
      out << '[';
      bool first = true;
      for (const auto& c : w.children()) {
        if (!first) out << ", ";
        first = false;
        print_word(c, out);
      }
      out << ']';
      break;
    }
  }
}

// ----------------------------------------------------------------- parsing

struct Lexer {
  enum class Tok { Ident, Number, Caret, LParen, RParen, LBracket, RBracket, Comma, Star, Eq,
                   Constant, End };

  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  Tok tok = Tok::End;
  std::string ident;
  long long number = 0;
  std::string constant_text;  // inside <...>
  std::size_t tok_pos = 0;

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_pos = pos_;
    if (pos_ >= text_.size()) {
      tok = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
        ++pos_;
      ident = text_.substr(start, pos_ - start);
      tok = Tok::Ident;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected digits after '-'", tok_pos);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      number = std::stoll(text_.substr(start, pos_ - start));
      tok = Tok::Number;
      return;
    }
    switch (c) {
      case '^': tok = Tok::Caret; ++pos_; return;
      case '(': tok = Tok::LParen; ++pos_; return;
      case ')': tok = Tok::RParen; ++pos_; return;
      case '[': tok = Tok::LBracket; ++pos_; return;
      case ']': tok = Tok::RBracket; ++pos_; return;
      case ',': tok = Tok::Comma; ++pos_; return;
      case '*': tok = Tok::Star; ++pos_; return;
      case '=': tok = Tok::Eq; ++pos_; return;
      case '<': {
        std::size_t close = text_.find('>', pos_);
        if (close == std::string::npos) throw ParseError("unterminated constant '<...>'", tok_pos);
        constant_text = text_.substr(pos_ + 1, close - pos_ - 1);
        pos_ = close + 1;
        tok = Tok::Constant;
        return;
      }
      default: throw ParseError(std::string("unknown token '") + c + "'", tok_pos);
    }
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

struct WordParser {
  Lexer lex;
  const FiniteGroup* coeff;  // null for coefficient-free words

  WordParser(const std::string& text, const FiniteGroup* coefficient_group)
      : lex(text), coeff(coefficient_group) {}

  Word parse_full() {
    Word w = parse_word_rule();
    if (lex.tok != Lexer::Tok::End) throw ParseError("trailing input after word", lex.tok_pos);
    return w;
  }

  Word parse_word_rule() {
    std::vector<Word> terms;
    terms.push_back(parse_term());
    while (true) {
      if (lex.tok == Lexer::Tok::Star) {
        lex.advance();
        terms.push_back(parse_term());
        continue;
      }
      if (lex.tok == Lexer::Tok::Ident || lex.tok == Lexer::Tok::LParen ||
          lex.tok == Lexer::Tok::LBracket || lex.tok == Lexer::Tok::Constant ||
          (lex.tok == Lexer::Tok::Number && coeff != nullptr && lex.number == 1)) {
        terms.push_back(parse_term());
        continue;
      }
      break;
    }
    return Word::product(std::move(terms));
  }

  Word parse_term() {
    Word f = parse_factor();
    if (lex.tok == Lexer::Tok::Caret) {
      lex.advance();
      if (lex.tok != Lexer::Tok::Number) throw ParseError("expected exponent", lex.tok_pos);
      long long e = lex.number;
      lex.advance();
      return Word::power(std::move(f), e);
    }
    return f;
  }

  Word parse_factor() {
    switch (lex.tok) {
      case Lexer::Tok::Ident: {
        std::string name = lex.ident;
        std::size_t pos = lex.tok_pos;
        lex.advance();
        if (name == "e") {
          if (coeff == nullptr)
            throw ParseError("'e' is reserved for the identity in mixed words", pos);
          return Word::constant(Permutation::identity(coeff->degree()));
        }
        return Word::variable(std::move(name));
      }
      case Lexer::Tok::Number: {
        if (coeff != nullptr && lex.number == 1) {
          lex.advance();
          return Word::constant(Permutation::identity(coeff->degree()));
        }
        throw ParseError("unexpected number", lex.tok_pos);
      }
      case Lexer::Tok::Constant: {
        if (coeff == nullptr)
          throw ParseError("constants are not allowed in coefficient-free words", lex.tok_pos);
        Permutation p = parse_cycles(lex.constant_text, coeff->degree());
        if (!coeff->contains(p))
          throw ParseError("constant does not belong to the coefficient group", lex.tok_pos);
        lex.advance();
        return Word::constant(std::move(p));
      }
      case Lexer::Tok::LParen: {
        lex.advance();
        Word w = parse_word_rule();
        if (lex.tok != Lexer::Tok::RParen) throw ParseError("expected ')'", lex.tok_pos);
        lex.advance();
        return w;
      }
      case Lexer::Tok::LBracket: {
        lex.advance();
        std::vector<Word> args;
        args.push_back(parse_word_rule());
        while (lex.tok == Lexer::Tok::Comma) {
          lex.advance();
          args.push_back(parse_word_rule());
        }
        if (lex.tok != Lexer::Tok::RBracket) throw ParseError("expected ']'", lex.tok_pos);
        if (args.size() < 2) throw ParseError("commutator needs at least two arguments", lex.tok_pos);
        lex.advance();
        return Word::commutator(std::move(args));
      }
      default: throw ParseError("expected a factor", lex.tok_pos);
    }
  }
};

}  // namespace

std::string Word::to_string() const {
  std::ostringstream out;
  print_word(*this, out);
  return out.str();
}

Word parse_word(const std::string& text) {
  WordParser p(text, nullptr);
  return p.parse_full();
}

Word parse_mixed_word(const std::string& text, const FiniteGroup& coefficient_group) {
  WordParser p(text, &coefficient_group);
  return p.parse_full();
}

Word substitute(const Word& w, const std::map<std::string, Word>& map) {
  switch (w.kind()) {
    case Word::Kind::Variable: {
      auto it = map.find(w.var_name());
      return it == map.end() ? w : it->second;
    }
    case Word::Kind::Constant: return w;
    case Word::Kind::Power: {
      bool base_was_var = w.base().kind() == Word::Kind::Variable;
      Word c = substitute(w.base(), map);
      // collapse a power replacement sitting directly under a power
      if (base_was_var && c.kind() == Word::Kind::Power)
        return Word::power(c.base(), c.exponent() * w.exponent());
      return Word::power(std::move(c), w.exponent());
    }
    case Word::Kind::Product: {
      std::vector<Word> ch;
      ch.reserve(w.children().size());
      for (const auto& c : w.children()) ch.push_back(substitute(c, map));
      return Word::product(std::move(ch));
    }
    case Word::Kind::Commutator: {
      std::vector<Word> ch;
      ch.reserve(w.children().size());
      for (const auto& c : w.children()) ch.push_back(substitute(c, map));
      return Word::commutator(std::move(ch));
    }
  }
  throw std::logic_error("unreachable");
}

Word flip_commutators(const Word& w) {
  switch (w.kind()) {
    case Word::Kind::Variable:
    case Word::Kind::Constant: return w;
    case Word::Kind::Power: return Word::power(flip_commutators(w.base()), w.exponent());
    case Word::Kind::Product: {
      std::vector<Word> ch;
      for (const auto& c : w.children()) ch.push_back(flip_commutators(c));
      return Word::product(std::move(ch));
    }
    case Word::Kind::Commutator: {
      Word acc = flip_commutators(w.children()[0]);
      for (std::size_t i = 1; i < w.children().size(); ++i) {
        Word b = flip_commutators(w.children()[i]);
        // opposite convention: [a,b] = a b a^-1 b^-1
        acc = Word::product({acc, b, Word::power(acc, -1), Word::power(b, -1)});
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

std::uint32_t evaluate_slots(const Word& w, const FiniteGroup& g,
                             const std::map<std::string, int>& slot_of,
                             const std::vector<std::uint32_t>& values) {
  switch (w.kind()) {
    case Word::Kind::Variable: {
      auto it = slot_of.find(w.var_name());
      if (it == slot_of.end())
        throw std::invalid_argument("assignment does not cover variable " + w.var_name());
      return values[it->second];
    }
    case Word::Kind::Constant: return g.index_of(w.constant_value());
    case Word::Kind::Power: {
      std::uint32_t b = evaluate_slots(w.base(), g, slot_of, values);
      return g.power(b, w.exponent());
    }
    case Word::Kind::Product: {
      std::uint32_t acc = FiniteGroup::kIdentity;
      for (const auto& c : w.children()) acc = g.mul(acc, evaluate_slots(c, g, slot_of, values));
      return acc;
    }
    case Word::Kind::Commutator: {
      std::uint32_t acc = evaluate_slots(w.children()[0], g, slot_of, values);
      for (std::size_t i = 1; i < w.children().size(); ++i) {
        std::uint32_t v = evaluate_slots(w.children()[i], g, slot_of, values);
        acc = g.commutator(acc, v);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

std::uint32_t evaluate(const Word& w, const std::map<std::string, std::uint32_t>& assignment,
                       const FiniteGroup& g) {
  std::map<std::string, int> slots;
  std::vector<std::uint32_t> values;
  int i = 0;
  for (const auto& [name, idx] : assignment) {
    slots[name] = i++;
    values.push_back(idx);
  }
  return evaluate_slots(w, g, slots, values);
}

}  // namespace fgt
