#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "flatgame/rational.hpp"

using flatgame::BadRationalError;
using flatgame::BigInt;
using flatgame::Rational;

TEST_CASE("construction reduces and normalizes sign") {
  Rational r(4, -6);
  CHECK(r.num() == BigInt(-2));
  CHECK(r.den() == BigInt(3));
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(10, 5).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), BadRationalError);
}

TEST_CASE("canonical form invariant: gcd 1, positive denominator") {
  for (long long n = -12; n <= 12; ++n) {
    for (long long d = -9; d <= 9; ++d) {
      if (d == 0) continue;
      Rational r(n, d);
      CHECK(r.den() > 0);
      CHECK(boost::multiprecision::gcd(BigInt(abs(r.num())), r.den()) == 1);
    }
  }
}

TEST_CASE("exact arithmetic identities") {
  // associativity and cancellation on a small lattice of fractions
  std::vector<Rational> values;
  for (long long n = -4; n <= 4; ++n) {
    for (long long d = 1; d <= 4; ++d) values.emplace_back(n, d);
  }
  for (const Rational& a : values) {
    for (const Rational& b : values) {
      CHECK(a + b - b == a);
      CHECK(flatgame::min(a, b) <= a);
      for (const Rational& c : values) {
        CHECK((a + b) + c == a + (b + c));
      }
    }
  }
}

TEST_CASE("ordering is total and consistent with arithmetic") {
  Rational third(1, 3), half(1, 2);
  CHECK(third < half);
  CHECK(half - third == Rational(1, 6));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(flatgame::max(third, half) == half);
  CHECK(Rational(-1, 3) < Rational(0));
}

TEST_CASE("parse accepts integers, fractions and decimals") {
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("-3/9").str() == "-1/3");
  CHECK(Rational::parse("2/4").str() == "1/2");  // unreduced input normalized
  CHECK(Rational::parse("3.25") == Rational(13, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("0.01") == Rational(1, 100));
  CHECK_THROWS_AS(Rational::parse("1/0"), BadRationalError);
  CHECK_THROWS_AS(Rational::parse(""), BadRationalError);
  CHECK_THROWS_AS(Rational::parse("abc"), BadRationalError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), BadRationalError);
}

TEST_CASE("str round trips through parse") {
  std::vector<Rational> values = {Rational(0), Rational(-7, 3), Rational(22, 7),
                                  Rational(5), Rational(-1, 1000000)};
  for (const Rational& v : values) {
    CHECK(Rational::parse(v.str()) == v);
  }
}

TEST_CASE("big values stay exact") {
  Rational big = Rational::parse("123456789123456789/2");
  CHECK(big * Rational(2) == Rational::parse("123456789123456789"));
  CHECK((big + big).str() == "123456789123456789");
}
