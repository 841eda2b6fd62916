#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "urysohn/rational.hpp"

using urysohn::Rational;

TEST_CASE("rationals are stored reduced with a positive denominator") {
  Rational a(6, -8);
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(0, -5).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic and ordering") {
  const Rational half(1, 2);
  const Rational third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(third < half);
  CHECK(-half < third);
  CHECK(abs(-half) == half);
  CHECK_THROWS(half / Rational(0));
}

TEST_CASE("floor and ceil round toward the right integers") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("text form round-trips") {
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("-2") == Rational(-2));
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("overflow is reported instead of wrapping") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  // Intermediates wider than 64 bits are fine when the result fits.
  CHECK(big * Rational(1, 3) / big == Rational(1, 3));
}

TEST_CASE("field laws on random small rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 30);
  for (int i = 0; i < 300; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
    CHECK(((a < b) == (a.to_double() < b.to_double()) || a == b));
  }
}
