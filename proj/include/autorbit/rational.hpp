#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace autorbit {

/// Exact fraction in lowest terms with positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);
  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q" or "p".
  static BigRational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) { v_ /= o.v_; return *this; }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend auto operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// base^e, with 0^0 = 1.
BigRational pow(const BigRational& base, unsigned long e);

}  // namespace autorbit
