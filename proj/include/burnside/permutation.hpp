#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace burnside {

// Permutation of {0, ..., degree-1} stored as an image table:
// images[i] is where i goes.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int degree);
  // Validates that `images` is a bijection; throws std::invalid_argument.
  static Permutation from_images(std::vector<int> images);
  // Parses cycle notation like "(0 1 2)(3 4)"; "()" is the identity.
  // Cycles are applied right-to-left, although disjoint cycles (the usual
  // case) commute anyway.  Point values must be < degree.
  static Permutation from_cycles(int degree, const std::string& cycles);

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[static_cast<size_t>(x)]; }
  bool is_identity() const;

  Permutation inverse() const;

  // Disjoint-cycle form with fixed points omitted; "()" for the identity.
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
};

// Composition acting left: (p * q)(x) = p(q(x)), i.e. q is applied first.
Permutation operator*(const Permutation& p, const Permutation& q);

struct PermutationHash {
  size_t operator()(const Permutation& p) const {
    size_t h = p.images.size();
    for (int v : p.images) h = h * 1000003u + static_cast<size_t>(v) + 0x9e3779b9u;
    return h;
  }
};

}  // namespace burnside
