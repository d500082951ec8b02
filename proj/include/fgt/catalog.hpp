#ifndef FGT_CATALOG_HPP
#define FGT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "fgt/group.hpp"

namespace fgt {

/// A named, ordered collection of group definitions. Lines are
///   name = <group expression>            (builtins, direct(...), earlier names)
///   name = gens(<degree>): (cycles), ...
/// with '#' comments. Names must be unique and defined before use.
class Catalog {
public:
  struct Entry {
    std::string name;
    std::string definition;  // normalized right-hand side
    FiniteGroup group;
  };

  const std::vector<Entry>& entries() const { return entries_; }
  const FiniteGroup* find(const std::string& name) const;
  void add(std::string name, std::string definition, FiniteGroup group);

  std::string to_text() const;

private:
  std::vector<Entry> entries_;
};

/// Builtin group expressions: S(n), A(n), C(n), Dih(n) (order 2n), Q8, V4,
/// direct(a, b), plus shorthands like S4, A5, C12, Dih4. Identifiers resolve
/// against the catalog first when one is supplied.
FiniteGroup resolve_group_ref(const std::string& ref, const Catalog* catalog = nullptr,
                              const Caps& caps = {});

/// resolve_group_ref without a catalog.
FiniteGroup builtin(const std::string& spec, const Caps& caps = {});

Catalog parse_catalog(const std::string& text, const Caps& caps = {});

/// The catalog shipped with the toolkit (used by the sweep suites).
const Catalog& default_catalog();

}  // namespace fgt

#endif
