#include "sinclp/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace sinclp {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!is_integer_literal(num_part))
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  if (num_part.front() == '+') num_part.remove_prefix(1);  // cpp_int rejects a leading +
  BigInt num{std::string(num_part)};
  BigInt den{1};
  if (slash != std::string_view::npos) {
    std::string_view den_part = text.substr(slash + 1);
    if (!is_integer_literal(den_part) || den_part.front() == '-' || den_part.front() == '+')
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    den = BigInt{std::string(den_part)};
    if (den == 0)
      throw std::invalid_argument("zero denominator in rational literal: '" + std::string(text) + "'");
  }
  return make_rational(std::move(num), std::move(den));
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [1/2, 1)
  // 53 mantissa bits make mant * 2^53 an exact integer.
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  BigInt num(scaled);
  const int e = exp - 53;
  if (e >= 0) return Rational(num << e);
  return make_rational(std::move(num), BigInt(1) << -e);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_pow(const Rational& base, unsigned exponent) {
  if (exponent == 0) return Rational(1);
  return make_rational(pow(numerator(base), exponent), pow(denominator(base), exponent));
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt result{1};
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step: result is C(n-k+i, i)
  }
  return result;
}

BigInt factorial_big(unsigned n) {
  BigInt result{1};
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal_string(const Rational& q, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("significant_digits must be >= 1");
  BigInt num = numerator(q);
  if (num == 0) return "0";
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt den = denominator(q);

  // Decimal exponent: number of digits of the integer part of num/den, minus one.
  long exponent = 0;
  {
    BigInt ipart = num / den;
    if (ipart > 0) {
      exponent = static_cast<long>(ipart.str().size()) - 1;
    } else {
      BigInt scaled = num;
      while (scaled < den) {
        scaled *= 10;
        --exponent;
      }
    }
  }

  // Round-half-up the first `significant_digits` digits of num/den * 10^-exponent.
  const long shift = significant_digits - 1 - exponent;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (shift >= 0)
    scaled_num *= pow(BigInt(10), static_cast<unsigned>(shift));
  else
    scaled_den *= pow(BigInt(10), static_cast<unsigned>(-shift));
  BigInt digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);

  std::string ds = digits.str();
  if (static_cast<int>(ds.size()) > significant_digits) {  // rounding carried over, e.g. 999->1000
    ds.resize(significant_digits);
    ++exponent;
  }

  std::string out;
  if (negative) out += '-';
  out += ds.substr(0, 1);
  if (ds.size() > 1) {
    out += '.';
    out += ds.substr(1);
  }
  char buf[16];
  std::snprintf(buf, sizeof(buf), "e%+03ld", exponent);
  out += buf;
  return out;
}

}  // namespace sinclp
