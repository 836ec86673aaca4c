#include "sinclp/bspline.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sinclp {

PiecewisePoly make_box() {
  return PiecewisePoly({Rational(-1, 2), Rational(1, 2)}, {{Rational(1)}});
}

PiecewisePoly convolve_box(const PiecewisePoly& f) { return f.convolve_box(); }

const PiecewisePoly& bspline(int n) {
  if (n < 0) throw std::domain_error("bspline order must be nonnegative");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const PiecewisePoly>> cache;
  {
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // Build outside the lock, reusing the largest cached order below n.
  int start = 0;
  PiecewisePoly poly = make_box();
  {
    std::scoped_lock lock(mutex);
    for (auto it = cache.rbegin(); it != cache.rend(); ++it) {
      if (it->first <= n) {
        start = it->first;
        poly = *it->second;
        break;
      }
    }
  }
  for (int k = start; k < n; ++k) poly = poly.convolve_box();
  std::scoped_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(n, std::make_unique<const PiecewisePoly>(std::move(poly)));
  return *it->second;
}

Rational closed_form_eval(int n, const Rational& x) {
  if (n < 0) throw std::domain_error("bspline order must be nonnegative");
  if (n == 0) return (x >= Rational(-1, 2) && x < Rational(1, 2)) ? Rational(1) : Rational(0);
  const auto un = static_cast<unsigned>(n);
  Rational sum(0);
  for (unsigned k = 0; k <= un + 1; ++k) {
    Rational arg = x + Rational(n + 1, 2) - static_cast<int>(k);
    if (arg <= 0) continue;
    Rational term = rational_pow(arg, un) * binomial(un + 1, k);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum / Rational(factorial_big(un));
}

Rational eval(const PiecewisePoly& f, const Rational& x) { return f(x); }

Rational central(int n) { return closed_form_eval(n, Rational(0)); }

Rational exact_lp_integer(int p) {
  if (p < 1) throw std::domain_error("exact_lp_integer requires p >= 1");
  return central(2 * p - 1);
}

bool autocorrelation_check(int n) {
  const Rational lhs = bspline(n).squared().integral();
  return lhs == central(2 * n + 1);
}

double gaussian_profile_deviation(int n, std::span<const double> grid) {
  if (n < 1) throw std::domain_error("gaussian profile needs n >= 1");
  const double sigma = std::sqrt((n + 1) / 12.0);
  const double amplitude = std::sqrt(M_PI * (n + 1) / 6.0);
  double worst = 0.0;
  for (double x : grid) {
    if (!std::isfinite(x)) throw std::invalid_argument("grid point must be finite");
    const Rational arg = rational_from_double(sigma * x);
    const double spline = to_double(closed_form_eval(n, arg));
    const double deviation = std::abs(amplitude * spline - std::exp(-0.5 * x * x));
    worst = std::max(worst, deviation);
  }
  return worst;
}

}  // namespace sinclp
