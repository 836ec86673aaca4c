#include "sinclp/sinc_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sinclp {

namespace {

constexpr double kBallCutoff = 2.6832815729997476357;  // 6/sqrt(5)

// ln(sin t / t) = -sum c_k t^(2k); 22 terms cover |t| <= 1 to ~1e-24.
constexpr double kLogSincSeries[] = {
    0.166666666666666666667,     0.00555555555555555555556,
    0.000352733686067019400353,  0.0000264550264550264550265,
    0.00000213777991555769333547, 1.80367023400533100709e-7,
    1.56613913227669841426e-8,   1.38841304937372994225e-9,
    1.25043591760049960301e-10,  1.14025756022960914329e-11,
    1.05029239086375564075e-12,  9.75487784159370164967e-14,
    9.12346823085909780578e-15,  8.58371976189560934968e-16,
    8.11731800972778957704e-17,  7.71052751411627334559e-18,
    7.35284493271200264115e-19,  7.03610121039065230977e-20,
    6.75384729021744384506e-21,  6.50092411503431839714e-22,
    6.27315548670328603375e-23,  6.06712469126680671240e-24};

// ln|sin t / t|, exact -inf at zeros of sine; series branch keeps full
// relative accuracy where the ratio is close to 1.
double log_abs_sinc(double t) {
  t = std::abs(t);
  if (t <= 1.0) {
    const double t2 = t * t;
    double acc = 0.0;
    for (int k = std::size(kLogSincSeries); k-- > 0;) {
      acc *= t2;
      acc += kLogSincSeries[k];
    }
    return -acc * t2;
  }
  return std::log(std::abs(std::sin(t) / t));
}

// Mean of |sin|^(2p) over a period: Gamma(p + 1/2) / (sqrt(pi) Gamma(p + 1)).
double sin_power_mean(double p) {
  return std::exp(std::lgamma(p + 0.5) - std::lgamma(p + 1.0)) / std::sqrt(M_PI);
}

double require_p(double p, double least, const char* what) {
  if (!(p >= least))
    throw std::domain_error(std::string(what) + " requires p >= " + std::to_string(least));
  return p;
}

}  // namespace

double sinc_pow_integrand(double t, double p) {
  require_p(p, 0.5, "sinc_pow_integrand");
  if (!std::isfinite(t)) throw std::invalid_argument("sinc_pow_integrand: t must be finite");
  const double log_ratio = log_abs_sinc(t);
  if (std::isinf(log_ratio)) return 0.0;
  return std::exp(2.0 * p * log_ratio);
}

double tail_bound(double p, double T) {
  if (!(p > 0.5)) throw std::domain_error("tail_bound: integral tail diverges for p <= 1/2");
  if (!(T > 0)) throw std::invalid_argument("tail_bound: T must be positive");
  return (2.0 / M_PI) * std::pow(T, 1.0 - 2.0 * p) / (2.0 * p - 1.0);
}

double choose_cutoff(double p, double tol) {
  if (!(p > 0.5)) throw std::domain_error("choose_cutoff: requires p > 1/2");
  if (!(tol > 0)) throw std::invalid_argument("choose_cutoff: tol must be positive");
  // Invert tail_bound, then nudge onto the exact lobe boundary.
  const double target = tol / 2.0;
  const double exponent = 2.0 * p - 1.0;
  double k = std::ceil(std::pow(2.0 / (M_PI * exponent * target), 1.0 / exponent) / M_PI);
  if (!std::isfinite(k)) return std::numeric_limits<double>::infinity();
  k = std::max(k, 1.0);
  while (k > 1.0 && tail_bound(p, (k - 1.0) * M_PI) <= target) k -= 1.0;
  while (tail_bound(p, k * M_PI) > target) k += 1.0;
  return k * M_PI;
}

TailCorrection tail_correction(double p, double T) {
  if (!(p > 0.5)) throw std::domain_error("tail_correction: requires p > 1/2");
  const double a0 = sin_power_mean(p);
  const double a0_sq_gap = std::max(0.0, sin_power_mean(2.0 * p) - a0 * a0);
  TailCorrection tc;
  tc.estimate = (2.0 / M_PI) * a0 * std::pow(T, 1.0 - 2.0 * p) / (2.0 * p - 1.0);
  tc.residual_bound = (2.0 / M_PI) * p * std::pow(T, -2.0 * p - 1.0) *
                      std::sqrt(2.0 * a0_sq_gap) * M_PI * M_PI / std::sqrt(90.0);
  return tc;
}

double choose_cutoff_corrected(double p, double tol) {
  if (!(p > 0.5)) throw std::domain_error("choose_cutoff_corrected: requires p > 1/2");
  if (!(tol > 0)) throw std::invalid_argument("choose_cutoff_corrected: tol must be positive");
  const double target = tol / 2.0;
  const double a0 = sin_power_mean(p);
  const double coeff = (2.0 / M_PI) * p *
                       std::sqrt(2.0 * std::max(0.0, sin_power_mean(2.0 * p) - a0 * a0)) *
                       M_PI * M_PI / std::sqrt(90.0);
  double k = 1.0;
  if (coeff > target * std::pow(M_PI, 2.0 * p + 1.0))
    k = std::max(1.0, std::ceil(std::pow(coeff / target, 1.0 / (2.0 * p + 1.0)) / M_PI));
  while (k > 1.0 && tail_correction(p, (k - 1.0) * M_PI).residual_bound <= target) k -= 1.0;
  while (tail_correction(p, k * M_PI).residual_bound > target) k += 1.0;
  return k * M_PI;
}

SincNormResult sinc_lp_integral(double p, const QuadratureConfig& cfg) {
  require_p(p, 1.0, "sinc_lp_integral");

  const double T = choose_cutoff_corrected(p, cfg.abs_tol);
  const auto lobes = static_cast<long>(std::llround(T / M_PI));
  const TailCorrection tail = tail_correction(p, T);

  const auto integrand = [p](double t) { return sinc_pow_integrand(t, p); };

  // Per-lobe budgets sum to at most abs_tol/2 (sum over k of 1/(k+1)^2 < pi^2/6).
  const double budget_scale = (cfg.abs_tol / 2.0) * (6.0 / (M_PI * M_PI));

  double sum = 0.0;
  double sum_compensation = 0.0;  // Kahan: thousands of lobes at tol-level sums
  double quad_error = 0.0;
  for (long k = 0; k < lobes; ++k) {
    QuadratureConfig lobe_cfg = cfg;
    lobe_cfg.abs_tol = budget_scale / (static_cast<double>(k + 1) * static_cast<double>(k + 1));
    lobe_cfg.rel_tol = cfg.rel_tol / 2.0;
    const QuadratureResult lobe =
        integrate_adaptive(integrand, static_cast<double>(k) * M_PI,
                           static_cast<double>(k + 1) * M_PI, lobe_cfg);
    if (!lobe.converged)
      throw std::runtime_error("sinc_lp_integral: lobe " + std::to_string(k) +
                               " did not converge within the panel budget");
    const double y = lobe.value - sum_compensation;
    const double t = sum + y;
    sum_compensation = (t - sum) - y;
    sum = t;
    quad_error += lobe.error_estimate;
  }

  SincNormResult result;
  result.p = p;
  result.value = (2.0 / M_PI) * sum + tail.estimate;
  result.quad_error = (2.0 / M_PI) * quad_error;
  result.tail_bound = tail.residual_bound;
  result.cutoff = T;
  result.total_error = result.quad_error + result.tail_bound;
  return result;
}

double central_integral(double p, const QuadratureConfig& cfg) {
  require_p(p, 1.0, "central_integral");
  QuadratureConfig inner = cfg;
  inner.abs_tol = cfg.abs_tol * (M_PI / 2.0);  // budget in unnormalized units
  const QuadratureResult r =
      integrate_adaptive([p](double t) { return sinc_pow_integrand(t, p); }, 0.0, kBallCutoff,
                         inner);
  if (!r.converged)
    throw std::runtime_error("central_integral: quadrature did not converge to cfg.abs_tol");
  return (2.0 / M_PI) * r.value;
}

}  // namespace sinclp
