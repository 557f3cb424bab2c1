#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autorbit/finite_group.hpp"
#include "autorbit/rational.hpp"

namespace autorbit {

/// Multiplication table of a small group on its element ids.
struct CayleyTable {
  std::size_t order = 0;
  std::vector<ElementId> table;  // row-major, table[a * order + b] = a*b
  std::vector<ElementId> inverse;
  std::vector<std::uint64_t> element_order;

  explicit CayleyTable(const FiniteGroup& g);
  ElementId mul(ElementId a, ElementId b) const { return table[std::size_t{a} * order + b]; }
};

/// Aut(G) as a permutation group on the element ids of G.
struct AutomorphismGroup {
  FiniteGroup carrier;
  FiniteGroup group;     // degree = |carrier|
  ElementSet inner;      // element ids of `group` that are inner automorphisms
};

inline constexpr std::size_t kMaxAutCarrierOrder = 2000;
inline constexpr std::uint64_t kDefaultAutNodeBudget = 50'000'000;

/// Complete Aut(G) by backtracking over generator images, pruned by
/// element fingerprints. Throws TooLarge (|G| > max_order) and
/// BudgetExceeded (more than `node_budget` partial maps tried).
AutomorphismGroup automorphism_group(const FiniteGroup& g,
                                     std::uint64_t node_budget = kDefaultAutNodeBudget,
                                     std::size_t max_order = kMaxAutCarrierOrder);

/// Rebuilds an AutomorphismGroup from stored generators after validating
/// each one against the carrier's multiplication.
AutomorphismGroup automorphism_group_from_generators(const FiniteGroup& g,
                                                     const std::vector<Permutation>& generators);

/// Permutation of element ids induced by x -> g x g^-1.
Permutation inner_automorphism(const FiniteGroup& g, ElementId conjugator);

struct OrbitReport {
  std::string group;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> orbit_sizes;  // descending
  std::uint64_t maol_length = 0;           // MAOL
  BigRational maol;                        // MAOL / |G|
};

/// Closure of {x} under the given permutations.
ElementSet orbit_of(ElementId x, const std::vector<Permutation>& gens);

/// Orbits of Aut(G) on G. Throws ActionMismatch when A does not act on
/// the element ids of G.
OrbitReport maol(const FiniteGroup& g, const AutomorphismGroup& a);

}  // namespace autorbit
