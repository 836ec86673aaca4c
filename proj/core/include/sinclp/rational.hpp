#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sinclp {

// Exact scalars for the B-spline engine. Backed by Boost.Multiprecision;
// expression templates are off so arithmetic results have value type.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// num/den with the sign moved to the numerator. Throws std::domain_error on
// a zero denominator.
Rational make_rational(BigInt num, BigInt den);

// Accepts "a", "a/b" and "-a/b" with decimal integer literals.
// Throws std::invalid_argument on anything else (including "a/0").
Rational parse_rational(std::string_view text);

// Exact: every finite double is a dyadic rational.
Rational rational_from_double(double x);

double to_double(const Rational& q);

Rational rational_pow(const Rational& base, unsigned exponent);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial_big(unsigned n);

// "num/den" (always with the denominator, e.g. "2/3", "-1/6", "5/1").
std::string to_fraction_string(const Rational& q);

// Rounded decimal rendering in scientific form, e.g. "6.6666666666666667e-01"
// for 2/3 at 17 significant digits.
std::string to_decimal_string(const Rational& q, int significant_digits);

}  // namespace sinclp
