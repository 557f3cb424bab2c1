#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autorbit {

/// Points are 0-based. Degree is capped at 65535 so images fit 16 bits.
using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

/// A bijection on {0,...,degree-1}. Composition is right-to-left:
/// compose(p, q)(x) = p(q(x)).
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation from_span(std::span<const Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  /// Order of the permutation as an element of Sym_degree.
  std::uint64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Point> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// g * x * g^-1
Permutation conjugate(const Permutation& x, const Permutation& g);

/// Disjoint cycles including 1-cycles; each cycle starts at its smallest
/// point, cycles sorted by that point, and p(c[j]) = c[j+1].
struct CycleSet {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> cycles;

  /// Sorted cycle lengths, longest first.
  std::vector<std::size_t> cycle_type() const;
  Permutation to_permutation() const;
  /// Cycles of length > 1 in 1-based notation, "()" for the identity.
  std::string to_string() const;
};

CycleSet cycle_decompose(const Permutation& p);

/// Parses "(1 2)(3 4 5)" (1-based points, commas optional) into a
/// permutation of the given degree.
Permutation parse_cycles(std::string_view text, std::size_t degree);

}  // namespace autorbit
