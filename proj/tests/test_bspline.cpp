#include <doctest.h>

#include <cmath>
#include <future>
#include <vector>

#include "sinclp/bspline.hpp"

using namespace sinclp;

TEST_CASE("unit box") {
  const PiecewisePoly box = make_box();
  CHECK(eval(box, Rational(0)) == 1);
  CHECK(eval(box, Rational(-1, 2)) == 1);  // half-open convention
  CHECK(eval(box, Rational(1, 2)) == 0);
  CHECK(eval(box, Rational(1)) == 0);
  CHECK(box.integral() == 1);
  CHECK(box.degree() == 0);
}

TEST_CASE("convolution recursion reproduces the classical values") {
  const PiecewisePoly hat = convolve_box(make_box());
  CHECK(eval(hat, Rational(0)) == 1);
  CHECK(eval(hat, Rational(1, 2)) == Rational(1, 2));
  CHECK(hat.support_left() == -1);
  CHECK(hat.support_right() == 1);

  const PiecewisePoly quadratic = convolve_box(hat);
  CHECK(eval(quadratic, Rational(0)) == Rational(3, 4));
  CHECK(eval(quadratic, Rational(1, 2)) == Rational(1, 2));
  CHECK(eval(quadratic, Rational(2)) == 0);

  const PiecewisePoly cubic = convolve_box(quadratic);
  CHECK(eval(cubic, Rational(0)) == Rational(2, 3));
  CHECK(eval(cubic, Rational(1)) == Rational(1, 6));
  CHECK(eval(cubic, Rational(-1)) == Rational(1, 6));

  CHECK(eval(bspline(5), Rational(0)) == Rational(11, 20));
}

TEST_CASE("closed form evaluation") {
  CHECK(closed_form_eval(1, Rational(0)) == 1);
  CHECK(closed_form_eval(2, Rational(1, 2)) == Rational(1, 2));
  CHECK(closed_form_eval(4, Rational(0)) == Rational(115, 192));
  CHECK(closed_form_eval(0, Rational(0)) == 1);
  CHECK(closed_form_eval(0, Rational(1, 2)) == 0);
  CHECK_THROWS_AS(closed_form_eval(-1, Rational(0)), std::domain_error);
}

TEST_CASE("dual oracle equality across the support") {
  for (int n = 0; n <= 12; ++n) {
    const PiecewisePoly& built = bspline(n);
    for (int i = 0; i <= 24; ++i) {
      // 25 points spanning [-(n+1)/2, (n+1)/2]
      const Rational x = Rational(-(n + 1), 2) + Rational((n + 1) * i, 24);
      CHECK(eval(built, x) == closed_form_eval(n, x));
    }
  }
}

TEST_CASE("normalization, symmetry, nonnegativity") {
  for (int n = 0; n <= 20; ++n) CHECK(bspline(n).integral() == 1);
  for (int n = 1; n <= 10; ++n) {
    const PiecewisePoly& beta = bspline(n);
    for (int i = 1; i <= 7; ++i) {
      const Rational x = Rational((n + 1) * i, 15);  // inside the right half
      CHECK(eval(beta, x) == eval(beta, -x));
      CHECK(eval(beta, x) >= 0);
    }
  }
}

TEST_CASE("smoothness: derivatives match at every interior knot") {
  for (int n = 1; n <= 10; ++n) {
    const PiecewisePoly& beta = bspline(n);
    const auto& knots = beta.breakpoints();
    for (std::size_t k = 1; k + 1 < knots.size(); ++k)
      for (int order = 0; order <= n - 1; ++order)
        CHECK(beta.derivative_at(knots[k], order) ==
              beta.derivative_from_left(knots[k], order));
  }
}

TEST_CASE("central values and the integer-p oracle") {
  CHECK(central(1) == 1);
  CHECK(central(3) == Rational(2, 3));
  CHECK(central(5) == Rational(11, 20));
  CHECK(central(7) == Rational(151, 315));
  CHECK(central(15) == Rational(BigInt(2330931341), BigInt(6810804000)));

  CHECK(exact_lp_integer(1) == 1);
  CHECK(exact_lp_integer(2) == Rational(2, 3));
  CHECK(exact_lp_integer(3) == Rational(11, 20));
  CHECK_THROWS_AS(exact_lp_integer(0), std::domain_error);
}

TEST_CASE("central value at order 999 agrees with its Gaussian limit") {
  const Rational c = central(999);
  const double value = to_double(c);
  CHECK(std::abs(value - 0.043695381426214302) <= 1e-15);
  const double unser = std::sqrt(6.0 / (M_PI * 1000.0));
  CHECK(std::abs(value / unser - 1.0) <= 0.01);
}

TEST_CASE("autocorrelation identity") {
  // By hand: integral of box^2 = 1 = beta^1(0), integral of hat^2 = 2/3 = beta^3(0).
  CHECK(make_box().squared().integral() == 1);
  CHECK(bspline(1).squared().integral() == Rational(2, 3));
  for (int n = 0; n <= 8; ++n) CHECK(autocorrelation_check(n));
}

TEST_CASE("gaussian profile deviation") {
  const double at_zero[] = {0.0};
  const double n1 = gaussian_profile_deviation(1, at_zero);
  CHECK(std::abs(n1 - (std::sqrt(M_PI / 3.0) - 1.0)) <= 1e-14);  // ~0.02333

  CHECK(gaussian_profile_deviation(40, at_zero) < gaussian_profile_deviation(10, at_zero));

  const double beyond[] = {10.0};
  CHECK(gaussian_profile_deviation(2, beyond) == doctest::Approx(std::exp(-50.0)));

  CHECK_THROWS_AS(gaussian_profile_deviation(0, at_zero), std::domain_error);
  const double non_finite[] = {std::nan("")};
  CHECK_THROWS_AS(gaussian_profile_deviation(3, non_finite), std::invalid_argument);
}

TEST_CASE("memoized builder is consistent under concurrent access") {
  auto worker = [] { return to_double(eval(bspline(9), Rational(1, 3))); };
  auto f1 = std::async(std::launch::async, worker);
  auto f2 = std::async(std::launch::async, worker);
  auto f3 = std::async(std::launch::async, worker);
  const double expected = to_double(closed_form_eval(9, Rational(1, 3)));
  CHECK(f1.get() == expected);
  CHECK(f2.get() == expected);
  CHECK(f3.get() == expected);
  CHECK_THROWS_AS(bspline(-2), std::domain_error);
}
