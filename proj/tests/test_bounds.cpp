#include <doctest.h>

#include <cmath>

#include "sinclp/bounds.hpp"
#include "sinclp/bspline.hpp"

using namespace sinclp;

namespace {
constexpr double kP0Reference = 1.8414008851002202638;  // 20-digit root
}

TEST_CASE("ball bound") {
  CHECK(ball_bound(1.0) == 1.0);
  CHECK(ball_bound(4.0) == 0.5);
  CHECK(ball_bound(2.0) == doctest::Approx(0.70710678118654752).epsilon(1e-15));
  CHECK_THROWS_AS(ball_bound(0.5), std::domain_error);
}

TEST_CASE("p0 solver") {
  const double p0 = solve_p0(1e-6);
  CHECK(std::round(p0 * 1e4) / 1e4 == doctest::Approx(1.8414));
  CHECK(std::abs(p0 - kP0Reference) <= 1e-13);

  const double lhs = std::pow(std::sqrt(5.0) / 6.0, 2.0 * p0 - 1.0) /
                     (std::sqrt(p0) - 0.5 / std::sqrt(p0));
  const double rhs = M_PI * (1.0 - std::sqrt(3.0 / M_PI));
  CHECK(std::abs(lhs - rhs) <= 1e-12);
  CHECK(std::abs(rhs - 0.071612529750327773) <= 1e-15);

  // Monotone bracketing of the defining equation on [1, 3].
  const auto g = [](double p) {
    return std::pow(std::sqrt(5.0) / 6.0, 2.0 * p - 1.0) / (std::sqrt(p) - 0.5 / std::sqrt(p));
  };
  CHECK(g(1.0) > rhs);
  CHECK(rhs > g(3.0));
  CHECK(std::abs(g(1.0) - 0.745355992499929899) <= 1e-12);
  CHECK(std::abs(g(3.0) - 0.00498068845962887974) <= 1e-12);

  CHECK_THROWS_AS(solve_p0(0.0), std::invalid_argument);
}

TEST_CASE("C(p) branches") {
  CHECK(c_of_p(1.0) == doctest::Approx(std::sqrt(M_PI / 3.0)).epsilon(1e-15));
  CHECK(c_of_p(1.5) == doctest::Approx(std::sqrt(M_PI / 3.0)).epsilon(1e-15));
  CHECK(std::abs(c_of_p(3.0) - 1.0016223845949204) <= 1e-12);
  CHECK(std::abs(c_of_p(2.0) - 1.0158960576964276) <= 1e-12);

  // Continuity across the branch point.
  const double p0 = kP0Reference;
  CHECK(std::abs(c_of_p(p0 - 1e-9) - c_of_p(p0 + 1e-9)) <= 1e-8);
  CHECK(std::abs(c_second_branch(p0) - std::sqrt(M_PI / 3.0)) <= 1e-12);

  CHECK_THROWS_AS(c_of_p(0.9), std::domain_error);
}

TEST_CASE("improved bound") {
  CHECK(std::abs(improved_bound(1.0) - 1.0) <= 1e-15);
  for (double p : {1.0, 1.2, 1.5, 1.8}) {
    CHECK(std::abs(improved_bound(p) - ball_bound(p)) <= 1e-15);  // first branch cancels
  }
  CHECK(std::abs(improved_bound(3.0) - 0.56510491603671871) <= 1e-12);
  for (double p : {1.0, 2.0, 3.0, 10.0, 50.0})
    CHECK(improved_bound(p) <= ball_bound(p) + 1e-15);
}

TEST_CASE("sandwich check") {
  CHECK(sandwich_check(2.5));  // 11/20 <= I(2.5) <= 2/3
  CHECK(sandwich_check(2.0));
  CHECK(sandwich_check(1.0001));
  CHECK(sandwich_check(1.3));
  CHECK(sandwich_check(7.7));
  CHECK_THROWS_AS(sandwich_check(0.8), std::domain_error);
}

TEST_CASE("asymptotic ratio") {
  CHECK(asymptotic_ratio(1.0) == doctest::Approx(std::sqrt(M_PI / 3.0)).epsilon(1e-14));
  CHECK(std::abs(asymptotic_ratio(2.0) - 0.96480167274435688) <= 1e-14);
  CHECK(std::abs(asymptotic_ratio(4.0) - 0.98109417714234769) <= 1e-14);
  // Non-integer p goes through quadrature; must land near the exact neighbours.
  const double r = asymptotic_ratio(2.0000001);
  CHECK(std::abs(r - 0.9648017) <= 1e-5);
  CHECK(std::abs(asymptotic_ratio(500.0) - 1.0) <= 1.7e-4);  // exact oracle route
}

TEST_CASE("bound report") {
  const BoundReport r1 = bound_report(1.0);
  CHECK(std::abs(r1.margin_ball) <= 1e-10);
  CHECK(std::abs(r1.margin_improved) <= 1e-10);

  const BoundReport r2 = bound_report(2.0);
  CHECK(r2.margin_improved > 0.0);
  CHECK(r2.margin_improved <= r2.margin_ball);
  CHECK(std::abs(r2.integral.value - 2.0 / 3.0) <= 1e-10);

  const BoundReport r10 = bound_report(10.0);
  CHECK(r10.margin_ball > 0.0);
  CHECK(r10.margin_improved > 0.0);
  CHECK(r10.improved_bound <= r10.ball_bound + 1e-15);
  CHECK(std::abs(r10.asymptotic_ratio - asymptotic_ratio(10.0)) <= 1e-10);
}

TEST_CASE("bound_reports preserves grid order under concurrency") {
  const double grid[] = {1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 13.0, 21.0};
  const auto reports = bound_reports(grid, {});
  REQUIRE(reports.size() == std::size(grid));
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].p == grid[i]);
    CHECK(std::abs(reports[i].integral.value - sinc_lp_integral(grid[i]).value) <= 1e-14);
  }
}

TEST_CASE("verification suite") {
  const double single[] = {1.0};
  const VerificationSummary at_one = verify_suite(single);
  CHECK(at_one.passed);
  CHECK(at_one.failures.empty());
  CHECK(at_one.checks_run > 5);

  const double small[] = {1.0, 1.5, 2.0, 5.0, 10.0};
  const VerificationSummary s = verify_suite(small);
  CHECK(s.passed);
  CHECK(s.grid.size() == 5);

  // Adversarial grid containing the branch point itself.
  const double at_p0[] = {1.0, kP0Reference, 3.0};
  CHECK(verify_suite(at_p0).passed);

  CHECK_THROWS_AS(verify_suite(std::span<const double>{}), std::invalid_argument);
  const double bad[] = {0.5, 2.0};
  CHECK_THROWS_AS(verify_suite(bad), std::invalid_argument);
}
