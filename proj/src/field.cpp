#include "autorbit/field.hpp"

#include "autorbit/errors.hpp"

namespace autorbit {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly digits(std::uint64_t x, std::uint32_t p, std::size_t len) {
  Poly c(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    c[i] = static_cast<std::uint32_t>(x % p);
    x /= p;
  }
  return c;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  std::size_t f = m.size() - 1;
  for (std::size_t d = 1; 2 * d <= f; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly divisor = digits(low, p, d);
      divisor.push_back(1);
      if (poly_mod(m, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw BadParameter("not a prime power: " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t f = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++f;
  }
  if (r != 1) throw BadParameter("not a prime power: " + std::to_string(q));
  return {static_cast<std::uint32_t>(p), f};
}

FiniteField make_field(std::uint32_t p, std::uint32_t f) {
  if (!is_prime(p)) throw NotPrime("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw BadParameter("field extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > (1u << 20)) throw TooLarge("field order exceeds 2^20");
  }

  FiniteField F;
  F.p_ = p;
  F.f_ = f;
  F.q_ = static_cast<std::uint32_t>(q);

  // the integer encoding of the low coefficients orders monic polynomials
  // by their coefficients from degree f-1 down to the constant term
  for (std::uint64_t low = 0;; ++low) {
    Poly m = digits(low, p, f);
    m.push_back(1);
    if (f == 1 || is_irreducible(m, p)) {
      F.modulus_ = std::move(m);
      break;
    }
  }

  // primitive element: order exactly q-1
  std::vector<std::uint64_t> prime_factors;
  {
    std::uint64_t n = q - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime_factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) prime_factors.push_back(n);
  }
  auto slow_pow = [&](const Poly& a, std::uint64_t e) {
    Poly r{1}, b = a;
    while (e) {
      if (e & 1) r = poly_mul_mod(r, b, F.modulus_, p);
      b = poly_mul_mod(b, b, F.modulus_, p);
      e >>= 1;
    }
    return r;
  };
  Poly generator;
  for (std::uint64_t cand = 1; cand < q; ++cand) {
    Poly g = digits(cand, p, f);
    trim(g);
    bool primitive = true;
    for (auto r : prime_factors) {
      Poly x = slow_pow(g, (q - 1) / r);
      if (x.size() == 1 && x[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }

  F.exp_.resize(q - 1);
  F.log_.assign(q, 0);
  Poly cur{1};
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    Poly c = cur;
    c.resize(f, 0);
    FiniteField::Elem x = F.from_coefficients(c);
    F.exp_[i] = x;
    F.log_[x] = static_cast<std::uint32_t>(i);
    cur = poly_mul_mod(cur, generator, F.modulus_, p);
  }

  if (q <= 256) {
    F.add_table_.resize(q * q);
    for (FiniteField::Elem a = 0; a < q; ++a)
      for (FiniteField::Elem b = 0; b < q; ++b) {
        FiniteField::Elem r = 0, scale = 1, x = a, y = b;
        for (std::uint32_t i = 0; i < f; ++i) {
          r += ((x % p + y % p) % p) * scale;
          x /= p;
          y /= p;
          scale *= p;
        }
        F.add_table_[a * q + b] = r;
      }
  }
  return F;
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem x) const { return digits(x, p_, f_); }

FiniteField::Elem FiniteField::from_coefficients(const std::vector<std::uint32_t>& c) const {
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    r += (i < c.size() ? c[i] % p_ : 0) * scale;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t e = log_[a] + log_[b];
  if (e >= q_ - 1) e -= q_ - 1;
  return exp_[e];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw BadParameter("inverse of zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1)];
}

}  // namespace autorbit
