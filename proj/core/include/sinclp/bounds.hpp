#pragma once

#include <span>
#include <string>
#include <vector>

#include "sinclp/sinc_norm.hpp"

namespace sinclp {

// Ball's inequality, the piecewise improvement constant C(p), the branch
// point p0, and the numerical verification suite tying them together.

struct BoundReport {
  double p = 0.0;
  SincNormResult integral;
  double ball_bound = 0.0;       // 1/sqrt(p)
  double c_p = 0.0;              // C(p)
  double improved_bound = 0.0;   // C(p) * sqrt(3/pi) / sqrt(p)
  double margin_ball = 0.0;      // ball_bound - integral.value
  double margin_improved = 0.0;  // improved_bound - integral.value
  double asymptotic_ratio = 0.0; // integral.value * sqrt(p) / sqrt(3/pi)
};

struct VerificationFailure {
  std::string check;
  double p = 0.0;
  double observed = 0.0;
  double required = 0.0;
};

struct VerificationSummary {
  std::vector<double> grid;
  int checks_run = 0;
  std::vector<VerificationFailure> failures;
  bool passed = false;
};

// 1/sqrt(p). Requires p >= 1.
double ball_bound(double p);

// C(p): sqrt(pi/3) on [1, p0], then 1 + (sqrt5/6)^(2p-1) /
// (sqrt(3 pi) (sqrt(p) - 1/(2 sqrt(p)))). The branch point is the cached
// high-precision root from solve_p0.
double c_of_p(double p);

// C(p) * sqrt(3/pi) / sqrt(p); collapses to 1/sqrt(p) on [1, p0].
double improved_bound(double p);

// Root of (sqrt5/6)^(2p-1) / (sqrt(p) - 1/(2 sqrt(p))) = pi (1 - sqrt(3/pi))
// by bisection on [1, 3], where the left side is strictly decreasing.
// tol bounds the bracket width; the residual lands at machine level.
double solve_p0(double tol);

// The second branch of C(p) evaluated unconditionally (used for the branch
// consistency check: >= sqrt(pi/3) left of p0, <= right of it).
double c_second_branch(double p);

// I([p]+1) <= I(p) <= I([p]) with exact rational endpoints and the middle
// from quadrature, allowing total_error slack.
bool sandwich_check(double p, const QuadratureConfig& cfg = {});

// I(p) * sqrt(p) / sqrt(3/pi). Exact rational route for integer p (within
// reach of the closed form), quadrature otherwise.
double asymptotic_ratio(double p, const QuadratureConfig& cfg = {});

BoundReport bound_report(double p, const QuadratureConfig& cfg = {});

// One report per grid point, evaluated concurrently, returned in grid order.
std::vector<BoundReport> bound_reports(std::span<const double> grid,
                                       const QuadratureConfig& cfg = {});

// Every bound/identity check across the grid; failures are data, not errors.
VerificationSummary verify_suite(std::span<const double> grid, const QuadratureConfig& cfg = {});

}  // namespace sinclp
