#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sinclp/rational.hpp"

using namespace sinclp;

TEST_CASE("parsing rational literals") {
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("+7/2") == Rational(7, 2));
  CHECK(to_fraction_string(parse_rational("-4/6")) == "-2/3");

  for (const char* bad : {"", "abc", "1/0", "1/-2", "2/", "/3", "1.5", "1/2/3", "--1"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("normalization invariants hold after arithmetic") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(-500, 500);
  std::uniform_int_distribution<int> den(1, 500);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = make_rational(num(rng), den(rng));
    const Rational b = make_rational(num(rng), den(rng));
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(denominator(r) > 0);
      CHECK(gcd(abs(numerator(r)), denominator(r)) == 1);
    }
    if (b != 0) {
      const Rational q = a / b;
      CHECK(denominator(q) > 0);
      CHECK(gcd(abs(numerator(q)), denominator(q)) == 1);
    }
  }
}

TEST_CASE("make_rational normalizes signs and rejects zero denominators") {
  const Rational r = make_rational(6, -8);
  CHECK(numerator(r) == -3);
  CHECK(denominator(r) == 4);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("dyadic conversion from double is exact") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-0.75) == Rational(-3, 4));
  CHECK(rational_from_double(3.0) == Rational(3));
  CHECK(rational_from_double(0.0) == Rational(0));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = dist(rng);
    CHECK(to_double(rational_from_double(x)) == x);
  }
}

TEST_CASE("power, binomial and factorial helpers") {
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(-1, 2), 2) == Rational(1, 4));
  CHECK(rational_pow(Rational(5), 0) == Rational(1));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(1000, 2) == 499500);
  CHECK(binomial(4, 7) == 0);
  CHECK(factorial_big(10) == 3628800);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal_string(Rational(2, 3), 17) == "6.6666666666666667e-01");
  CHECK(to_decimal_string(Rational(1), 17) == "1.0000000000000000e+00");
  CHECK(to_decimal_string(Rational(-1, 6), 17) == "-1.6666666666666667e-01");
  CHECK(to_decimal_string(Rational(115, 192), 17) == "5.9895833333333333e-01");
  CHECK(to_decimal_string(Rational(9999, 10), 2) == "1.0e+03");  // carry propagates
  CHECK(to_decimal_string(Rational(1, 400), 3) == "2.50e-03");
  CHECK(to_decimal_string(Rational(0), 17) == "0");
}
