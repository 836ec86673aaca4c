#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace sinclp {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;  // cap on panels in the final partition
  int panel_order = 15;         // Kronrod points per panel: 15 or 21
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, summed over panels
  int panels_used = 0;
  bool converged = false;
};

// Thrown when the integrand returns NaN/inf at an evaluation point.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(double abscissa)
      : std::runtime_error("integrand is not finite at t = " + std::to_string(abscissa)),
        abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
// The per-panel error estimate is the embedded-pair discrepancy; panels are
// bisected worst-first until sum(err) <= max(abs_tol, rel_tol*|value|) or the
// panel budget runs out (converged = false, partial sums still reported).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg = {});

}  // namespace sinclp
