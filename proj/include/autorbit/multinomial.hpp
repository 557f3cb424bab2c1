#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autorbit/rational.hpp"
#include "autorbit/stypes.hpp"
#include "autorbit/wreath.hpp"

namespace autorbit {

/// Classes c_1..c_k of one type with their proportions and the counts
/// l_{c_i}(M) of a multiset M.
struct TypeDistribution {
  std::uint32_t type = 0;
  std::vector<std::uint32_t> classes;
  std::vector<BigRational> rho;
  std::vector<std::uint64_t> counts;

  std::uint64_t n() const;
};

/// n! / (l_1! ... l_k!)
mpz_class multinomial_coefficient(const std::vector<std::uint64_t>& counts);

/// Multinomial pmf: (n; l) rho_1^l_1 ... rho_k^l_k. Throws BadParameter
/// unless the rho sum to 1 and match the counts in length.
BigRational r_value(const TypeDistribution& d);
BigRational multinomial_pmf(const std::vector<BigRational>& rho,
                            const std::vector<std::uint64_t>& counts);

/// Product over (cycle length, type) of r(M_l^type(w)).
BigRational orbit_upper_bound(const WreathGroup& h, const WreathElement& w,
                              const ClassTypeTable& table);

/// f(x) = (n; l) x_1^(l_1 - 1) x_2^l_2 ... x_k^l_k at
/// x = ((l_1 - 1)/(n - 1), l_2/(n - 1), ..., l_k/(n - 1)), with 0^0 = 1.
/// Throws BadComposition unless l_1 >= ... >= l_k >= 1 and n >= 2 (k = 1 is
/// allowed for any n).
BigRational lemma3_candidate_value(std::uint64_t n, const std::vector<std::uint64_t>& counts);

/// Partitions of n into exactly k positive parts, each nonincreasing,
/// listed in colex order (compared from the last part).
std::vector<std::vector<std::uint64_t>> partitions_into(std::uint64_t n, std::size_t k);

struct BoundViolation {
  std::string where;
  BigRational value;
  BigRational bound;
};

struct SweepResult {
  std::uint64_t checked = 0;
  std::vector<BoundViolation> violations;
  std::uint64_t equality_cases = 0;
};

struct GridRange {
  std::size_t k;
  std::uint64_t n_min, n_max;
  std::vector<std::uint64_t> excluded;
};

/// k=4: n in 1..9; k=3: n in 1..15 without 3; k=2: n in 10..96.
std::vector<GridRange> lemma3_grid_ranges();

/// Every candidate value on the grids must be <= 1.
SweepResult verify_lemma3_grids(const std::vector<GridRange>& ranges = lemma3_grid_ranges());

/// All rho = (a_1, ..., a_k)/D with D <= max_denominator and k <= max_k,
/// all counts with 1 <= n <= max_n: pmf <= max rho_i.
SweepResult pmf_bound_exhaustive(std::uint64_t max_denominator = 6, std::size_t max_k = 4,
                                 std::uint64_t max_n = 8);

/// Same assertion on seeded random rational vectors.
SweepResult pmf_bound_random(std::uint64_t samples, std::uint64_t seed);

}  // namespace autorbit
