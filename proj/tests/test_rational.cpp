#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nec/rational.hpp"

using nec::Rational;

TEST_CASE("normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  Rational a(1, 6), b(1, 3);
  CHECK(a + b == Rational(1, 2));
  CHECK(b - a == a);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(1, 2));
  CHECK(-a == Rational(-1, 6));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7) > Rational(13, 2));
  CHECK(Rational(3, 6) <= Rational(1, 2));
}

TEST_CASE("strings") {
  CHECK(Rational(1, 84).str() == "1/84");
  CHECK(Rational(-1, 8).str() == "-1/8");
  CHECK(Rational(2).str() == "2/1");
  CHECK(Rational(2).pretty() == "2");
  CHECK(Rational::parse("1/84") == Rational(1, 84));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS(Rational::parse("x/y"));
}

TEST_CASE("field laws on a small grid") {
  for (int an = -4; an <= 4; ++an)
    for (int ad = 1; ad <= 4; ++ad)
      for (int bn = -4; bn <= 4; ++bn)
        for (int bd = 1; bd <= 4; ++bd) {
          Rational a(an, ad), b(bn, bd);
          CHECK(a + b == b + a);
          CHECK(a * b == b * a);
          CHECK(a + Rational(0) == a);
          CHECK(a * Rational(1) == a);
          CHECK(a - a == Rational(0));
        }
}
