#include <doctest.h>

#include "autorbit/errors.hpp"
#include "autorbit/rational.hpp"

using autorbit::BigRational;

TEST_CASE("normal form") {
  BigRational r(6, -8);
  CHECK(r.str() == "-3/4");
  CHECK(r.denominator() == 4);
  CHECK(BigRational(4, 2).str() == "2");
  CHECK(BigRational::parse("10/4") == BigRational(5, 2));
  CHECK(BigRational::parse("7") == BigRational(7));
  CHECK_THROWS_AS(BigRational::parse("1/0"), autorbit::ParseError);
  CHECK_THROWS_AS(BigRational::parse("x"), autorbit::ParseError);
  CHECK_THROWS(BigRational(1, 0));
}

TEST_CASE("arithmetic and order") {
  BigRational a(1, 3), b(1, 6);
  CHECK(a + b == BigRational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == BigRational(1, 18));
  CHECK(a / b == BigRational(2));
  CHECK(b < a);
  CHECK(BigRational(3, 7) <= BigRational(18, 19));
}

TEST_CASE("powers") {
  CHECK(pow(BigRational(0), 0) == BigRational(1));
  CHECK(pow(BigRational(0), 3) == BigRational(0));
  CHECK(pow(BigRational(2, 3), 3) == BigRational(8, 27));
  CHECK(pow(BigRational(1, 2), 100).denominator() == mpz_class(1) << 100);
}
