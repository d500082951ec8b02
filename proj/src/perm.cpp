#include "fgt/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fgt {

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<std::uint32_t> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& one_based) {
  std::vector<std::uint32_t> im(one_based.size());
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    if (one_based[i] < 1 || one_based[i] > static_cast<int>(one_based.size()))
      throw std::invalid_argument("image out of range");
    im[i] = static_cast<std::uint32_t>(one_based[i] - 1);
  }
  return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("image list is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  long long ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::uint32_t j = static_cast<std::uint32_t>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[i] = rhs.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                               : static_cast<unsigned long long>(e);
  Permutation acc = identity(degree());
  while (n > 0) {
    if (n & 1ULL) acc = acc * base;
    base = base * base;
    n >>= 1ULL;
  }
  return acc;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (std::uint32_t j = static_cast<std::uint32_t>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<std::uint32_t> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = static_cast<std::uint32_t>(i);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty cycle expression");
  bool saw_cycle = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation at position " + std::to_string(pos));
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point number in cycle at position " + std::to_string(pos));
      std::uint32_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint32_t>(text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > static_cast<std::uint32_t>(degree))
        throw std::invalid_argument("cycle point " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(degree));
      cycle.push_back(v - 1);
    }
    saw_cycle = true;
    if (cycle.size() >= 2) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::uint32_t from = cycle[i];
        std::uint32_t to = cycle[(i + 1) % cycle.size()];
        if (im[from] != from) throw std::invalid_argument("point repeated across cycles");
        im[from] = to;
      }
    }
  }
  if (!saw_cycle) throw std::invalid_argument("no cycles found");
  return Permutation(std::move(im));
}

Permutation pad_to_degree(const Permutation& a, int degree) {
  if (degree < a.degree()) throw std::invalid_argument("pad target smaller than degree");
  std::vector<std::uint32_t> im(degree);
  for (int i = 0; i < a.degree(); ++i) im[i] = a[i];
  for (int i = a.degree(); i < degree; ++i) im[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(im));
}

}  // namespace fgt
