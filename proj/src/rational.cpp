#include "autorbit/rational.hpp"

#include "autorbit/errors.hpp"

namespace autorbit {

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw BadParameter("rational with zero denominator");
  v_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0 || v.get_den() == 0)
    throw ParseError("not a rational number: " + std::string(text));
  return BigRational(std::move(v));
}

BigRational pow(const BigRational& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), e);
  return BigRational(mpq_class(num, den));
}

}  // namespace autorbit
