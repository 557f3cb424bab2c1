#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autorbit/finite_group.hpp"
#include "autorbit/rational.hpp"
#include "autorbit/wreath.hpp"

namespace autorbit {

/// Aut(S) in some faithful permutation representation, with S inside it.
struct SimpleAmbient {
  FiniteGroup aut;
  ElementSet socle;  // element ids of S in `aut`
};

/// Aut(S) for a simple group S, chosen by the catalog name: Sym_n for
/// Alt_n (n != 6); PGammaL with the duality for PSL_d(q), d >= 3 (also
/// for PGL_d(q) when it equals PSL_d(q)); the field-automorphism extension
/// for PSU_d(q) = PGU_d(q), d >= 3, gcd(d, q+1) = 1; the automorphism
/// search otherwise.
SimpleAmbient simple_ambient(const FiniteGroup& s);

/// Aut(S)/S with its projection. Throws NotNormal.
struct OutQuotient {
  QuotientMap map;
  std::size_t order() const { return map.group.order(); }
};

OutQuotient out_quotient(const FiniteGroup& aut_s, const ElementSet& s);

/// Projection Aut(S) -> Aut(S)/D for a designated D with S <= D and
/// abelian quotient.
struct CoarseTyping {
  QuotientMap map;
};

/// Throws NotNormal, BadParameter (S not inside D), NonAbelianQuotient.
CoarseTyping coarse_typing(const FiniteGroup& aut_s, const ElementSet& s, const ElementSet& d);

struct ClassTypeEntry {
  std::uint64_t size = 0;
  std::uint32_t type = 0;              // Out(S)-class of the image
  BigRational rho;                     // |c| / (|S| |type|)
  std::optional<ElementId> coarse;     // image in Aut(S)/D when available
};

struct ClassTypeTable {
  std::uint64_t socle_order = 0;
  std::uint64_t out_order = 0;
  std::vector<ClassTypeEntry> classes;      // indexed like aut_s.classes()
  std::vector<std::uint64_t> type_sizes;    // Out-class sizes, by type id
  std::vector<std::uint32_t> type_of_class;

  BigRational h() const;
};

/// Coarse types use D = S when Aut(S)/S is abelian and are left empty
/// otherwise, unless a typing is supplied.
ClassTypeTable class_type_table(const FiniteGroup& aut_s, const ElementSet& s,
                                const CoarseTyping* typing = nullptr);

/// max_c rho(c).
BigRational h_value(const FiniteGroup& aut_s, const ElementSet& s);

/// Sorted quotient element ids.
using CoarseTypeSet = std::vector<ElementId>;

/// Coarse types of the bcpc classes of w, whose base group is Aut(S).
CoarseTypeSet ct_set(const WreathGroup& h, const WreathElement& w, const CoarseTyping& typing);

/// Compares CT(w^k) with {t^k : t in CT(w)}. Throws GcdViolation when k
/// is not coprime to the order of the top part.
bool ct_power_check(const WreathGroup& h, const WreathElement& w, std::int64_t k,
                    const CoarseTyping& typing);

}  // namespace autorbit
