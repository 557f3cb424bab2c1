#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autorbit/field.hpp"
#include "autorbit/finite_group.hpp"

namespace autorbit {

FiniteGroup sym(std::size_t n);
FiniteGroup alt(std::size_t n);
FiniteGroup cyclic(std::size_t n);
/// Heisenberg group of unitriangular 3x3 matrices over F_p acting
/// affinely on F_p^2: (x, y) -> (x + a*y + c, y + b). Point x + p*y.
FiniteGroup extraspecial_p3_exponent_p(std::uint32_t p);

/// Square matrix over a finite field, row-major.
struct Matrix {
  std::size_t dim = 0;
  std::vector<FiniteField::Elem> entries;

  FiniteField::Elem at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
  FiniteField::Elem& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity_matrix(std::size_t dim);
Matrix mat_mul(const FiniteField& F, const Matrix& a, const Matrix& b);
FiniteField::Elem determinant(const FiniteField& F, Matrix m);
/// Throws BadParameter if singular.
Matrix mat_inverse(const FiniteField& F, const Matrix& m);
Matrix transpose(const Matrix& m);
/// Entrywise x -> x^e.
Matrix entrywise_power(const FiniteField& F, const Matrix& m, std::uint64_t e);

enum class ClassicalKind { GL, SL, GU, SU };

/// Nonzero vectors normalized so the last nonzero coordinate is 1,
/// sorted lexicographically.
class ProjectiveSpace {
 public:
  ProjectiveSpace(const FiniteField& field, std::size_t dim);
  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<FiniteField::Elem>& point(std::size_t i) const { return points_[i]; }
  /// Index of the line through a nonzero vector.
  std::size_t index_of(std::vector<FiniteField::Elem> v) const;
  /// Permutation of points induced by x -> A x.
  Permutation action(const Matrix& a) const;

 private:
  FiniteField field_;
  std::size_t dim_;
  std::vector<std::vector<FiniteField::Elem>> points_;
  std::vector<std::uint32_t> lookup_;  // base-q code -> index
};

struct ProjectiveGroup {
  FiniteGroup group;
  FiniteField field;  // F_q, or F_{q^2} for unitary kinds
  std::vector<Matrix> matrices;  // generators, in the order of group.generators()
};

/// Order of the projective group, by the standard order formulas.
std::uint64_t projective_group_order(ClassicalKind kind, std::size_t d, std::uint64_t q);

/// PGL/PSL/PGU/PSU_d(q) as a permutation group on the projective points of
/// the natural module. Unitary groups use the identity Gram matrix over
/// F_{q^2} with x -> x^q. Throws TooLarge, BadParameter.
ProjectiveGroup projective_group_with_matrices(ClassicalKind kind, std::size_t d, std::uint64_t q,
                                               std::size_t limit = kDefaultClosureLimit);
FiniteGroup projective_group(ClassicalKind kind, std::size_t d, std::uint64_t q,
                             std::size_t limit = kDefaultClosureLimit);

/// The projective group extended by the field automorphism x -> x^p
/// acting on coordinates; named "psigmal(d,q)" or "psigmau(d,q)".
FiniteGroup projective_semilinear_group(ClassicalKind kind, std::size_t d, std::uint64_t q,
                                        std::size_t limit = kDefaultClosureLimit);

/// A A^* = I for the conjugation x -> x^q on F_{q^2}.
bool preserves_hermitian_form(const FiniteField& F, std::uint64_t q, const Matrix& a);

/// PGammaL_d(q) extended by the inverse-transpose duality, acting on the
/// points followed by the hyperplanes of PG(d-1,q); this is Aut(PSL_d(q))
/// for d >= 3. Hyperplane i is the one with dual coordinates point(i).
/// Throws BadParameter (d < 3), TooLarge, ClosureLimitExceeded.
FiniteGroup extended_aut_psl(std::size_t d, std::uint64_t q, std::size_t limit = kDefaultClosureLimit,
                             std::string name = {});
/// Aut(PSL_3(4)) on the 21 points (0..20) and 21 lines (21..41) of PG(2,4).
FiniteGroup extended_aut_psl34();

/// Named catalog entries, e.g. "alt5", "sym(6)", "psl(3,4)", "pgu(4,2)",
/// "extraspecial(3)", "aut_psl34".
struct CatalogEntry {
  std::string name;
  std::uint64_t order;
};
std::vector<CatalogEntry> catalog_list();
/// Throws BadParameter for unknown names.
FiniteGroup named_group(std::string_view name, std::size_t limit = kDefaultClosureLimit);
/// Normalized spelling: "alt(5)" -> "alt5", "PSL(3, 4)" -> "psl(3,4)".
std::string canonical_group_name(std::string_view name);

}  // namespace autorbit
