#include <doctest.h>

#include "fockda/rational.hpp"

using fockda::Rational;

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.to_string() == "-3/2");
  CHECK(r.denominator() == 2);
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0, 7).is_zero());
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 32) * Rational(32) == Rational(1));
  CHECK(Rational(-3, 4) / Rational(3, 8) == Rational(-2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parsing accepts p, -p and p/q only") {
  CHECK(Rational::parse("15/2") == Rational(15, 2));
  CHECK(Rational::parse("-1/4") == Rational(-1, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2x"), std::invalid_argument);
}

TEST_CASE("to_int64 rejects non-integers") {
  CHECK(Rational(-9).to_int64() == -9);
  CHECK_THROWS_AS(Rational(1, 2).to_int64(), std::domain_error);
}
