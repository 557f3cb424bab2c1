#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "autorbit/finite_group.hpp"
#include "autorbit/rational.hpp"

namespace autorbit {

/// (g_1, ..., g_n) sigma with g_i element ids of the base group.
struct WreathElement {
  std::vector<ElementId> base;
  Permutation top;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// G wr T for T a subgroup of Sym_n. Multiplication:
///   (g, s)(h, u) = ((g_i * h_{s^-1(i)})_i, s u)
/// which is composition of the induced maps (i, x) -> (s(i), g_{s(i)}(x)).
class WreathGroup {
 public:
  /// Top group defaults to the full Sym_n.
  WreathGroup(FiniteGroup base, std::size_t n);
  WreathGroup(FiniteGroup base, FiniteGroup top);

  const FiniteGroup& base() const { return base_; }
  const FiniteGroup& top() const { return top_; }
  std::size_t n() const { return n_; }
  /// |G|^n * |T|, or nullopt on 64-bit overflow.
  std::optional<std::uint64_t> order() const;

  WreathElement identity() const;
  WreathElement make(std::vector<ElementId> base, Permutation top) const;
  WreathElement mul(const WreathElement& a, const WreathElement& b) const;
  WreathElement inv(const WreathElement& a) const;
  /// b a b^-1
  WreathElement conj(const WreathElement& a, const WreathElement& b) const;
  WreathElement power(const WreathElement& a, std::int64_t k) const;

  /// Base generators at every coordinate plus top generators.
  std::vector<WreathElement> generators() const;
  WreathElement random_element(std::mt19937_64& rng) const;

  /// Dense code in [0, |G|^n * n!): base digits then the Lehmer rank of
  /// the top within Sym_n.
  std::uint64_t encode(const WreathElement& w) const;
  WreathElement decode(std::uint64_t code) const;

  /// Every element; throws TooLarge above `limit`.
  std::vector<WreathElement> enumerate(std::uint64_t limit = kDefaultClosureLimit) const;

  /// Throws ShapeMismatch if w does not belong to this shape.
  void check_shape(const WreathElement& w) const;

  /// Base-group product, through the Cayley table when the base is small.
  ElementId base_mul(ElementId a, ElementId b) const {
    return table_ ? (*table_)[std::size_t{a} * base_.order() + b] : base_.mul(a, b);
  }

 private:

  FiniteGroup base_;
  FiniteGroup top_;
  std::size_t n_;
  const std::vector<ElementId>* table_ = nullptr;
};

/// Multiset as sorted (class id, multiplicity) pairs.
using ClassMultiset = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct BcpcProfile {
  /// cycle length l -> M_l(w); lengths without cycles are absent.
  std::map<std::size_t, ClassMultiset> by_length;
  /// (l, type) -> M_l^type(w); filled only when a typing is supplied.
  std::map<std::pair<std::size_t, std::uint32_t>, ClassMultiset> by_length_and_type;

  friend bool operator==(const BcpcProfile&, const BcpcProfile&) = default;
};

/// g_{i_l} ... g_{i_1} for the cycle (i_1 ... i_l) of w.top, oriented by
/// top(i_j) = i_{j+1}. Throws NotACycleOfTop.
ElementId bcpc_element(const WreathGroup& h, const WreathElement& w, std::span<const Point> cycle);
/// Base conjugacy class of bcpc_element.
std::uint32_t bcpc(const WreathGroup& h, const WreathElement& w, std::span<const Point> cycle);

/// `class_types`, when given, maps base class id -> type id.
BcpcProfile profile(const WreathGroup& h, const WreathElement& w,
                    const std::vector<std::uint32_t>* class_types = nullptr);

/// Conjugacy in G wr Sym_n decided from cycle types and bcpc multisets.
bool conj_test(const WreathGroup& h, const WreathElement& v, const WreathElement& w);

/// Searches every k in the group for k v k^-1 = w. Throws TooLarge if
/// the group has more than `limit` elements.
bool brute_force_conj(const WreathGroup& h, const WreathElement& v, const WreathElement& w,
                      std::uint64_t limit = 50'000'000);

/// Class label of every element (indexed like enumerate()), obtained by
/// conjugating each element by all group elements.
std::vector<std::uint32_t> brute_force_class_labels(const WreathGroup& h,
                                                    std::uint64_t limit = 5000);

/// Orbit of x under conjugation by the elements generated by `conjugators`
/// (which must live in a wreath group of the same base and n). Returns the
/// orbit as sorted codes of `h`.
std::vector<std::uint64_t> conjugation_orbit(const WreathGroup& h, const WreathElement& x,
                                             const std::vector<WreathElement>& conjugators,
                                             std::uint64_t limit = 50'000'000);

/// Conjugacy class sizes of every element of a wreath group with full
/// Sym_n top, indexed by encode().
std::vector<std::uint64_t> class_sizes_by_code(const WreathGroup& h,
                                               std::uint64_t limit = kDefaultClosureLimit);

/// The group Aut(S) wr <sigma>, sigma = (0 1 ... p-1), with its distinguished
/// element and the orbit-length prediction.
struct HpConstruction {
  WreathGroup group;              // top = <sigma>
  WreathGroup automorphisms;      // Aut(S) wr N_{Sym_p}(<sigma>)
  WreathElement alpha;            // (alpha_1, 1, ..., 1) sigma
  std::uint64_t order = 0;        // |Aut(S)|^p * p
  std::uint64_t alpha1_class = 0; // |alpha_1^{Aut(S)}|
  std::uint64_t predicted = 0;    // (p-1) |alpha_1^{Aut(S)}| |Aut(S)|^{p-1}
};

/// `aut_s` is any faithful permutation representation of Aut(S).
/// Throws BadParameter (p not prime) and TooLarge when
/// |Aut(S)|^p * p * (p-1) exceeds `limit`.
HpConstruction build_hp(const FiniteGroup& aut_s, std::uint32_t p,
                        std::uint64_t limit = 50'000'000);

struct HpMeasurement {
  std::uint64_t measured = 0;     // |alpha^{Aut(H_p)}| by orbit closure
  BigRational maol_lower_bound;   // measured / |H_p|
  BigRational target_bound;        // (1 - 1/p) * maol(Aut(S))
};

HpMeasurement measure_hp(const HpConstruction& hp, std::uint64_t limit = 50'000'000);

/// Lehmer rank of a permutation of {0..n-1} and its inverse.
std::uint64_t permutation_rank(const Permutation& p);
Permutation permutation_unrank(std::size_t n, std::uint64_t rank);

}  // namespace autorbit
