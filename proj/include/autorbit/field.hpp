#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace autorbit {

/// F_q with q = p^f. Elements are encoded as integers whose base-p digits
/// are the polynomial-basis coefficients (constant term least significant)
/// over the stored modulus; 0 and 1 encode the field's zero and one.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return f_; }
  std::uint32_t size() const { return q_; }
  /// Monic modulus coefficients, constant term first, length f+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem primitive_element() const { return exp_[exp_.size() > 1 ? 1 : 0]; }

  std::vector<std::uint32_t> coefficients(Elem x) const;
  Elem from_coefficients(const std::vector<std::uint32_t>& c) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws BadParameter on zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// x -> x^p
  Elem frobenius(Elem a) const { return pow(a, p_); }

 private:
  friend FiniteField make_field(std::uint32_t p, std::uint32_t f);
  FiniteField() = default;

  std::uint32_t p_ = 0, f_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;            // exp_[i] = g^i, length q-1
  std::vector<std::uint32_t> log_;   // log_[x] for x != 0
  std::vector<Elem> add_table_;      // q x q, only for small q
};

/// Field with the least irreducible modulus: monic polynomials compared
/// by coefficients from the highest degree downwards.
/// Throws NotPrime, TooLarge (p^f > 2^20), BadParameter (f = 0).
FiniteField make_field(std::uint32_t p, std::uint32_t f);

bool is_prime(std::uint64_t n);
/// Returns (p, f) with q = p^f or throws BadParameter.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

}  // namespace autorbit
