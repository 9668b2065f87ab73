#include <catch2/catch_amalgamated.hpp>

#include "grpdeg/rational.hpp"

using grpdeg::BigInt;
using grpdeg::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  Rational r(BigInt(40), BigInt(64));
  CHECK(r.numerator() == 5);
  CHECK(r.denominator() == 8);

  Rational neg(BigInt(3), BigInt(-6));
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);

  Rational both(BigInt(-18), BigInt(-36));
  CHECK(both.numerator() == 1);
  CHECK(both.denominator() == 2);

  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), grpdeg::InvalidParameter);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  CHECK(b < a);
  CHECK(a <= Rational(1, 3));
  CHECK(Rational(5, 8) > Rational(1, 2));

  // No float drift: 1/3 summed three times is exactly 1.
  Rational third(1, 3);
  CHECK((third + third + third) == Rational(1));
}

TEST_CASE("string round trip") {
  CHECK(Rational(5, 8).str() == "5/8");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-3, 9).str() == "-1/3");
  CHECK(Rational::parse("5/8") == Rational(5, 8));
  CHECK(Rational::parse("1") == Rational(1));
  CHECK(Rational::parse("-1/3") == Rational(-1, 3));
  CHECK_THROWS_AS(Rational::parse("abc"), grpdeg::ParseError);
}

TEST_CASE("big values stay exact") {
  // 24^5 * 24 does not fit the naive 32-bit range; make sure the chain of
  // products is exact end to end.
  BigInt total = grpdeg::bigint_pow(BigInt(24), 6);
  CHECK(total == BigInt("191102976"));
  Rational tiny(BigInt(1), total);
  CHECK((tiny * Rational(total)) == Rational(1));
  CHECK(Rational(grpdeg::bigint_pow(BigInt(10), 30),
                 grpdeg::bigint_pow(BigInt(10), 31)) == Rational(1, 10));
}
