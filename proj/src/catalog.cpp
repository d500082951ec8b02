#include "fgt/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "fgt/word.hpp"

namespace fgt {

namespace {

FiniteGroup make_symmetric(int n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("S(n) needs n >= 1");
  int degree = std::max(n, 1);
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> tr(degree);
    for (int i = 0; i < degree; ++i) tr[i] = i + 1;
    std::swap(tr[0], tr[1]);
    gens.push_back(Permutation::from_images(tr));
  }
  if (n >= 3) {
    std::vector<int> cyc(degree);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
    gens.push_back(Permutation::from_images(cyc));
  }
  return generate(degree, gens, caps, "S(" + std::to_string(n) + ")");
}

FiniteGroup make_alternating(int n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("A(n) needs n >= 1");
  int degree = std::max(n, 1);
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(parse_cycles("(1 2 3)", degree));
  if (n >= 4) {
    std::vector<int> cyc(degree);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
    } else {
      cyc[0] = 1;
      for (int i = 1; i < n; ++i) cyc[i] = i % (n - 1) + 2;
    }
    gens.push_back(Permutation::from_images(cyc));
  }
  FiniteGroup g = generate(degree, gens, caps, "A(" + std::to_string(n) + ")");
  std::size_t expected = 1;
  for (int i = 2; i <= n; ++i) expected *= static_cast<std::size_t>(i);
  expected = n < 2 ? 1 : expected / 2;
  if (g.order() != expected) throw std::logic_error("alternating group construction broken");
  return g;
}

FiniteGroup make_cyclic(int n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("C(n) needs n >= 1");
  if (n == 1) return FiniteGroup::trivial(1).with_name("C(1)");
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
  return generate(n, {Permutation::from_images(cyc)}, caps, "C(" + std::to_string(n) + ")");
}

FiniteGroup make_dihedral(int n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("Dih(n) needs n >= 1");
  if (n == 1) return make_cyclic(2, caps).with_name("Dih(1)");
  if (n == 2) {
    return generate(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)}, caps,
                    "Dih(2)");
  }
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n + 1;
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n + 1;  // 1 fixed, i <-> n+2-i
  FiniteGroup g = generate(n, {Permutation::from_images(rot), Permutation::from_images(refl)},
                           caps, "Dih(" + std::to_string(n) + ")");
  if (g.order() != 2 * static_cast<std::size_t>(n))
    throw std::logic_error("dihedral group construction broken");
  return g;
}

FiniteGroup make_quaternion(const Caps& caps) {
  // regular action on {1,-1,i,-i,j,-j,k,-k}; right multiplication by i and j
  Permutation ri = Permutation::from_images({3, 4, 2, 1, 8, 7, 5, 6});
  Permutation rj = Permutation::from_images({5, 6, 7, 8, 2, 1, 4, 3});
  FiniteGroup g = generate(8, {ri, rj}, caps, "Q8");
  if (g.order() != 8) throw std::logic_error("quaternion group construction broken");
  return g;
}

FiniteGroup make_klein(const Caps& caps) {
  return generate(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)}, caps, "V4");
}

struct RefParser {
  const std::string& text;
  std::size_t pos = 0;
  const Catalog* catalog;
  const Caps& caps;

  RefParser(const std::string& t, const Catalog* cat, const Caps& c)
      : text(t), catalog(cat), caps(c) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  FiniteGroup parse() {
    FiniteGroup g = parse_ref();
    skip_ws();
    if (pos != text.size())
      throw ParseError("trailing input in group reference", pos);
    return g;
  }

  FiniteGroup parse_ref() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected a group name", pos);
    std::string name = text.substr(start, pos - start);
    skip_ws();

    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      if (name == "direct") {
        FiniteGroup a = parse_ref();
        skip_ws();
        if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
        FiniteGroup b = parse_ref();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
        ++pos;
        return direct_product(a, b, caps);
      }
      long long arg = parse_int();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      return builtin_family(name, arg);
    }

    // bare identifier: catalog name, parameterless builtin, or shorthand
    if (catalog != nullptr) {
      if (const FiniteGroup* g = catalog->find(name)) return *g;
    }
    if (name == "Q8") return make_quaternion(caps);
    if (name == "V4") return make_klein(caps);
    std::size_t alpha = 0;
    while (alpha < name.size() && std::isalpha(static_cast<unsigned char>(name[alpha]))) ++alpha;
    bool digit_suffix = alpha > 0 && alpha < name.size();
    for (std::size_t i = alpha; i < name.size() && digit_suffix; ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) digit_suffix = false;
    if (digit_suffix) {
      std::string family = name.substr(0, alpha);
      long long arg = std::stoll(name.substr(alpha));
      if (family == "S" || family == "A" || family == "C" || family == "Dih")
        return builtin_family(family, arg);
    }
    throw ParseError("unknown group '" + name + "'", start);
  }

  FiniteGroup builtin_family(const std::string& family, long long arg) {
    if (arg < 1 || arg > 1'000'000) throw std::invalid_argument("group parameter out of range");
    int n = static_cast<int>(arg);
    if (family == "S") return make_symmetric(n, caps);
    if (family == "A") return make_alternating(n, caps);
    if (family == "C") return make_cyclic(n, caps);
    if (family == "Dih") return make_dihedral(n, caps);
    throw ParseError("unknown group family '" + family + "'", pos);
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    return std::stoll(text.substr(start, pos - start));
  }
};

}  // namespace

const FiniteGroup* Catalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e.group;
  return nullptr;
}

void Catalog::add(std::string name, std::string definition, FiniteGroup group) {
  if (find(name)) throw std::invalid_argument("duplicate catalog name '" + name + "'");
  entries_.push_back(Entry{std::move(name), std::move(definition), std::move(group)});
}

std::string Catalog::to_text() const {
  std::ostringstream out;
  for (const auto& e : entries_) out << e.name << " = " << e.definition << "\n";
  return out.str();
}

FiniteGroup resolve_group_ref(const std::string& ref, const Catalog* catalog, const Caps& caps) {
  RefParser p(ref, catalog, caps);
  return p.parse().with_name(ref);
}

FiniteGroup builtin(const std::string& spec, const Caps& caps) {
  return resolve_group_ref(spec, nullptr, caps);
}

Catalog parse_catalog(const std::string& text, const Caps& caps) {
  Catalog cat;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("catalog line " + std::to_string(line_no) + " has no '='", 0);
    std::string name = line.substr(0, eq);
    std::string rhs = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    };
    trim(name);
    trim(rhs);
    if (name.empty() || rhs.empty())
      throw ParseError("catalog line " + std::to_string(line_no) + " is malformed", 0);

    FiniteGroup g;
    if (rhs.rfind("gens(", 0) == 0) {
      auto close = rhs.find(')');
      auto colon = rhs.find(':', close == std::string::npos ? 0 : close);
      if (close == std::string::npos || colon == std::string::npos)
        throw ParseError("catalog line " + std::to_string(line_no) +
                             ": expected gens(<degree>): (cycles), ...",
                         0);
      int degree = static_cast<int>(std::stoll(rhs.substr(5, close - 5)));
      std::vector<Permutation> gens;
      std::string rest = rhs.substr(colon + 1);
      std::size_t p = 0;
      while (p < rest.size()) {
        while (p < rest.size() &&
               (std::isspace(static_cast<unsigned char>(rest[p])) || rest[p] == ','))
          ++p;
        if (p >= rest.size()) break;
        // one generator: a run of ( ... ) groups
        std::size_t start = p;
        while (p < rest.size() && rest[p] != ',') ++p;
        std::string cyc = rest.substr(start, p - start);
        gens.push_back(parse_cycles(cyc, degree));
      }
      g = generate(degree, gens, caps, name);
    } else {
      g = resolve_group_ref(rhs, &cat, caps).with_name(name);
    }
    cat.add(name, rhs, std::move(g));
  }
  return cat;
}

namespace {

const char* kDefaultCatalogText = R"(# Group catalog shipped with the toolkit.
# Cyclic groups
C1 = C(1)
C2 = C(2)
C3 = C(3)
C4 = C(4)
C5 = C(5)
C6 = C(6)
C8 = C(8)
C12 = C(12)
C16 = C(16)
C32 = C(32)
# Small nonabelian and elementary groups
V4 = V4
Q8 = Q8
Dih3 = Dih(3)
Dih4 = Dih(4)
Dih5 = Dih(5)
Dih6 = Dih(6)
Dih8 = Dih(8)
Dih12 = Dih(12)
Dih16 = Dih(16)
S3 = S(3)
S4 = S(4)
S5 = S(5)
S6 = S(6)
A4 = A(4)
A5 = A(5)
A6 = A(6)
F20 = gens(5): (1 2 3 4 5), (2 3 5 4)
# Direct products
C2xC3 = direct(C2, C3)
C2xC4 = direct(C2, C4)
C2xC8 = direct(C2, C8)
C4xC4 = direct(C4, C4)
C2xC2xC2 = direct(V4, C2)
C2xC2xC4 = direct(V4, C4)
C3xC3 = direct(C3, C3)
Q8xC2 = direct(Q8, C2)
Dih4xC2 = direct(Dih4, C2)
S3xC3 = direct(S3, C3)
S3xS3 = direct(S3, S3)
S3xC2 = direct(S3, C2)
A4xC2 = direct(A4, C2)
S4xC3 = direct(S4, C3)
S4xV4 = direct(S4, V4)
S4xS3 = direct(S4, S3)
)";

}  // namespace

const Catalog& default_catalog() {
  static const Catalog cat = parse_catalog(kDefaultCatalogText);
  return cat;
}

}  // namespace fgt
