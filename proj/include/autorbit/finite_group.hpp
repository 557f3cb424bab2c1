#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autorbit/permutation.hpp"

namespace autorbit {

using ElementId = std::uint32_t;
using ElementSet = std::vector<ElementId>;  // sorted ascending

inline constexpr std::size_t kDefaultClosureLimit = 2'000'000;

struct ConjClassTable {
  /// Each class sorted ascending; classes numbered by minimal element id.
  std::vector<ElementSet> classes;
  std::vector<std::uint32_t> class_of;

  std::size_t size() const { return classes.size(); }
  ElementId representative(std::size_t c) const { return classes[c].front(); }
  std::size_t largest_class_size() const;
};

/// A permutation group stored as its full element list, sorted
/// lexicographically by image array. Element 0 is the identity.
/// Immutable; copies share storage and write-once caches.
class FiniteGroup {
 public:
  std::size_t degree() const;
  std::size_t order() const;
  const std::string& name() const;
  FiniteGroup renamed(std::string name) const;

  std::span<const Point> element(ElementId id) const;
  Permutation permutation(ElementId id) const;
  std::optional<ElementId> find(std::span<const Point> images) const;
  /// Throws BadParameter if the permutation is not in the group.
  ElementId index_of(std::span<const Point> images) const;
  ElementId index_of(const Permutation& p) const { return index_of(p.images()); }

  const std::vector<Permutation>& generators() const;
  const std::vector<ElementId>& generator_ids() const;

  /// Product a*b under right-to-left composition.
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const;
  /// g * x * g^-1
  ElementId conj(ElementId x, ElementId g) const;
  ElementId power(ElementId x, std::int64_t k) const;
  std::uint64_t element_order(ElementId x) const;

  const ConjClassTable& classes() const;
  /// Row-major |G| x |G| table; only for |G| <= kMaxCayleyOrder.
  const std::vector<ElementId>& cayley_table() const;
  static constexpr std::size_t kMaxCayleyOrder = 4096;

 private:
  struct Storage;
  explicit FiniteGroup(std::shared_ptr<Storage> s) : s_(std::move(s)) {}
  friend FiniteGroup close_group(std::size_t, const std::vector<Permutation>&, std::size_t,
                                 std::string);
  std::shared_ptr<const Storage> s_;
  std::string name_;
};

/// Enumerates the group generated by `generators` on `degree` points.
/// Throws ClosureLimitExceeded once more than `limit` elements appear.
FiniteGroup close_group(std::size_t degree, const std::vector<Permutation>& generators,
                        std::size_t limit = kDefaultClosureLimit, std::string name = {});

ConjClassTable conjugacy_classes(const FiniteGroup& g);
/// |G| / largest class size, the minimal centralizer order.
std::uint64_t mcs(const FiniteGroup& g);

struct Subgroup {
  std::vector<ElementId> generators;
  ElementSet elements;
};

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const ElementId> generators);
/// Smallest subgroup containing `seeds` and normalized by `conjugators`.
Subgroup normal_closure(const FiniteGroup& g, std::span<const ElementId> seeds,
                        std::span<const ElementId> conjugators);
bool is_normal(const FiniteGroup& g, const ElementSet& n);
ElementSet center(const FiniteGroup& g);
/// G = D_0 > D_1 > ... until D_{i+1} = D_i.
std::vector<ElementSet> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

/// G/N acting on its cosets, with the projection recorded.
struct QuotientMap {
  FiniteGroup group;
  std::vector<ElementId> image;   // element of G -> element of group
  std::vector<ElementSet> cosets; // numbered by minimal element id
};

/// Throws NotNormal.
QuotientMap quotient_map(const FiniteGroup& g, const ElementSet& n);
FiniteGroup quotient_group(const FiniteGroup& g, const ElementSet& n);

/// Checks every entry of `auts` is an automorphism (permutation of
/// element ids preserving products) and maps N onto itself.
/// Throws InvalidAutomorphism.
bool is_characteristic(const FiniteGroup& g, const ElementSet& n,
                       const std::vector<Permutation>& auts);
void validate_automorphism(const FiniteGroup& g, const Permutation& aut);

}  // namespace autorbit
