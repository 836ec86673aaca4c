#pragma once

#include <vector>

#include "sinclp/rational.hpp"

namespace sinclp {

// A compactly supported piecewise polynomial with exact rational breakpoints
// and coefficients. Piece i covers [breakpoints[i], breakpoints[i+1]) and is
// stored in the shifted monomial basis about its left endpoint:
//   p_i(x) = sum_j coeffs[i][j] * (x - breakpoints[i])^j.
// The function is 0 outside [breakpoints.front(), breakpoints.back()).
class PiecewisePoly {
 public:
  PiecewisePoly(std::vector<Rational> breakpoints,
                std::vector<std::vector<Rational>> pieces);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<std::vector<Rational>>& pieces() const { return pieces_; }
  int degree() const;
  const Rational& support_left() const { return breakpoints_.front(); }
  const Rational& support_right() const { return breakpoints_.back(); }

  Rational operator()(const Rational& x) const;

  // d-th derivative of the piece containing x, one-sided from the right.
  Rational derivative_at(const Rational& x, int order) const;

  // Same, but from the left; at an interior knot this evaluates the
  // neighbouring piece. The two agree everywhere a C^d function lives.
  Rational derivative_from_left(const Rational& x, int order) const;

  Rational integral() const;

  // x -> integral_{x-1/2}^{x+1/2} f(t) dt, exact. Degree + 1, support + 1.
  PiecewisePoly convolve_box() const;

  PiecewisePoly squared() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<std::vector<Rational>> pieces_;
};

}  // namespace sinclp
