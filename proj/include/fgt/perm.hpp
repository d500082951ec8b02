#ifndef FGT_PERM_HPP
#define FGT_PERM_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgt {

/// A bijection of {1..degree}, stored as the image list of each point.
/// Points are 0-based internally; all text I/O (cycle notation) is 1-based.
/// Composition reads left to right: (a * b) applies a first, then b.
class Permutation {
public:
  Permutation() = default;

  /// Identity on {1..degree}.
  static Permutation identity(int degree);

  /// From a 1-based image list, e.g. {2,3,1} is the 3-cycle (1 2 3).
  static Permutation from_images(const std::vector<int>& one_based);

  /// Raw 0-based constructor; validates bijectivity.
  explicit Permutation(std::vector<std::uint32_t> images);

  int degree() const { return static_cast<int>(images_.size()); }
  std::uint32_t operator[](std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  int order() const;

  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;  // apply *this, then rhs
  Permutation pow(long long e) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  /// Disjoint-cycle text, 1-based, fixed points omitted, "()" for identity.
  std::string cycle_string() const;

private:
  std::vector<std::uint32_t> images_;
};

/// Parses disjoint cycle notation with spaces between points, e.g.
/// "(1 2 3)(4 5)"; "()" denotes the identity. Points must lie in 1..degree.
Permutation parse_cycles(const std::string& text, int degree);

/// a extended to a larger degree by fixed points.
Permutation pad_to_degree(const Permutation& a, int degree);

}  // namespace fgt

#endif
