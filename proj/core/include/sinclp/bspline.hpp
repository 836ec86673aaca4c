#pragma once

#include <span>

#include "sinclp/piecewise_poly.hpp"
#include "sinclp/rational.hpp"

namespace sinclp {

// Symmetric B-splines beta^n: the (n+1)-fold convolution of the unit box
// chi_[-1/2,1/2), built exactly in rational arithmetic. beta^n is a degree-n,
// C^{n-1}, even, nonnegative piecewise polynomial supported on
// [-(n+1)/2, (n+1)/2] with unit integral.

// beta^0. The value at the jump points follows the half-open convention:
// 1 on [-1/2, 1/2), 0 elsewhere.
PiecewisePoly make_box();

// One step of the recursion: x -> integral_{x-1/2}^{x+1/2} f.
PiecewisePoly convolve_box(const PiecewisePoly& f);

// beta^n by n convolution steps, memoized. The returned reference stays
// valid for the lifetime of the program.
const PiecewisePoly& bspline(int n);

// Independent truncated-power route:
//   beta^n(x) = (1/n!) sum_{k=0}^{n+1} (-1)^k C(n+1,k) (x + (n+1)/2 - k)_+^n.
// Never touches the bspline() cache. n = 0 falls back to the box convention.
Rational closed_form_eval(int n, const Rational& x);

Rational eval(const PiecewisePoly& f, const Rational& x);

// beta^n(0), via the closed form at 0 (cheap even for n in the hundreds).
Rational central(int n);

// I(p) for integer p >= 1, exactly: Plancherel turns the sinc-power integral
// into a spline autocorrelation at zero, giving I(p) = beta^{2p-1}(0).
Rational exact_lp_integer(int p);

// Checks integral of beta^n(s)^2 ds == beta^{2n+1}(0) in exact arithmetic.
bool autocorrelation_check(int n);

// sup over the grid of |sqrt(pi(n+1)/6) * beta^n(sigma_n x) - exp(-x^2/2)|
// with sigma_n = sqrt((n+1)/12); the grid points are mapped to exact dyadic
// rationals before spline evaluation.
double gaussian_profile_deviation(int n, std::span<const double> grid);

}  // namespace sinclp
