#include <doctest.h>

#include "oracle_util.hpp"
#include "vybe/rational.hpp"

using vybe::Rational;

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(5).str() == "5");
  CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational parse round-trips and rejects junk") {
  for (const char* s : {"0", "5", "-3/2", "7/3", "-12", "1000000000000000000000/7"}) {
    Rational r = Rational::parse(s);
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK(Rational::parse("4/2") == Rational(2));
  CHECK(Rational::parse("-4/6").str() == "-2/3");
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("a/b"));
  CHECK_THROWS(Rational::parse("1/-2"));
  CHECK_THROWS(Rational::parse("1.5"));
}

TEST_CASE("random rationals round-trip through arithmetic") {
  oracle::Rng rng(12345);
  for (int i = 0; i < 500; ++i) {
    Rational a = rng.rational(), b = rng.rational();
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a * b) - (b * a) == Rational(0));
  }
}

TEST_CASE("binomial extends to negative upper index") {
  CHECK(vybe::binomial(5, 2) == Rational(10));
  CHECK(vybe::binomial(-1, 3) == Rational(-1));
  CHECK(vybe::binomial(-2, 2) == Rational(3));
  CHECK(vybe::binomial(-3, 1) == Rational(-3));
  CHECK(vybe::binomial(3, 5) == Rational(0));
  CHECK(vybe::binomial(0, 0) == Rational(1));
  CHECK(vybe::factorial(5) == Rational(120));
}
