#include "coneval/rational.hpp"

#include "doctest.h"

using coneval::Rational;
using coneval::UsageError;

TEST_CASE("construction keeps lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-5, 10).str() == "-1/2");
  CHECK(Rational(5, -10).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), UsageError);
}

TEST_CASE("parse accepts p and p/q") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("+7/2").str() == "7/2");
  CHECK(Rational::parse("0/9") == Rational(0));
  CHECK_THROWS_AS(Rational::parse("1/0"), UsageError);
  CHECK_THROWS_AS(Rational::parse("1.5"), UsageError);
  CHECK_THROWS_AS(Rational::parse(""), UsageError);
  CHECK_THROWS_AS(Rational::parse("2/"), UsageError);
  CHECK_THROWS_AS(Rational::parse("a/3"), UsageError);
}

TEST_CASE("arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((-a).str() == "-1/3");
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
  CHECK_THROWS_AS(a / Rational(0), UsageError);

  // Repeated operations stay exact; no drift.
  Rational s;
  for (int i = 0; i < 100; ++i) s += Rational(1, 100);
  CHECK(s == Rational(1));
}

TEST_CASE("ordering and signs") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(3, 7).sign() == 1);
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational().sign() == 0);
  CHECK(Rational(5, 3) >= Rational(5, 3));
}
