#pragma once

#include "sinclp/quadrature.hpp"

namespace sinclp {

// Certified evaluation of I(p) = (1/pi) * integral over R of (sin^2 t / t^2)^p.

struct SincNormResult {
  double p = 0.0;
  double value = 0.0;       // estimate of I(p)
  double quad_error = 0.0;  // quadrature error estimate over [-T, T]
  double tail_bound = 0.0;  // certified bound on the |t| > T mass not in value
  double cutoff = 0.0;      // T, a positive multiple of pi
  double total_error = 0.0; // quad_error + tail_bound
};

// |sin t / t|^(2p), with the removable singularity filled (1 at t = 0).
// Evaluated as exp(2p * ln|sin t / t|); near zero ln(sin t / t) comes from
// its Taylor series so the result keeps ~1e-14 relative accuracy even at
// p = 1e6 wherever it does not underflow. Requires p >= 1/2.
double sinc_pow_integrand(double t, double p);

// (2/pi) * T^(1-2p) / (2p-1): the crude majorization of the discarded mass
// obtained from |sin t| <= 1. At T = 6/sqrt(5) this reproduces the closed
// form (1/pi) (sqrt5/6)^(2p-1) / (p - 1/2). Requires p > 1/2, T > 0.
double tail_bound(double p, double T);

// Smallest T = k*pi with T >= 6/sqrt(5) and tail_bound(p, T) <= tol/2.
// Grows like (1/tol)^(1/(2p-1)), so it is astronomically large for p near 1;
// sinc_lp_integral uses the mean-corrected cutoff below instead.
double choose_cutoff(double p, double tol);

// Mean-value tail correction. Splitting |sin t|^(2p) into its constant
// Fourier mode a0(p) plus oscillation, the |t| > T mass of I(p) equals
//   (2/pi) * a0(p) * T^(1-2p)/(2p-1)  + R,
// and integrating the cosine modes by parts twice (T a multiple of pi kills
// the boundary terms) gives the certified bound
//   |R| <= (2/pi) * p * T^(-2p-1) * sqrt(2(a0(2p) - a0(p)^2)) * pi^2/sqrt(90).
// The bound decays two powers of T faster than the crude tail_bound, which
// is what makes 1e-12 certification near p = 1 tractable.
struct TailCorrection {
  double estimate = 0.0;        // included in value
  double residual_bound = 0.0;  // certified bound on what is not
};
TailCorrection tail_correction(double p, double T);

// Smallest T = k*pi (k >= 1) with tail residual_bound <= tol/2.
double choose_cutoff_corrected(double p, double tol);

// I(p) for real p >= 1: lobe-by-lobe adaptive quadrature over [0, T] plus the
// mean-value tail correction; total_error = quad_error + tail residual bound.
SincNormResult sinc_lp_integral(double p, const QuadratureConfig& cfg = {});

// Ball's central piece (1/pi) * integral over |t| <= 6/sqrt(5), with
// quadrature error <= cfg.abs_tol. Requires p >= 1.
double central_integral(double p, const QuadratureConfig& cfg = {});

}  // namespace sinclp
