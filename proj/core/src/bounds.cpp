#include "sinclp/bounds.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sinclp/bspline.hpp"

namespace sinclp {

namespace {

constexpr double kBallCutoff = 2.6832815729997476357;  // 6/sqrt(5)
// Largest integer p whose exact oracle central(2p-1) we are willing to sum.
constexpr int kExactOracleLimit = 4096;

double sqrt5_over_6_pow(double p) { return std::pow(std::sqrt(5.0) / 6.0, 2.0 * p - 1.0); }

// Left side of the p0 defining equation, strictly decreasing on [1, 3].
double p0_lhs(double p) { return sqrt5_over_6_pow(p) / (std::sqrt(p) - 0.5 / std::sqrt(p)); }

double p0_rhs() { return M_PI * (1.0 - std::sqrt(3.0 / M_PI)); }

double cached_p0() {
  static const double value = solve_p0(1e-12);
  return value;
}

double require_p_at_least_one(double p, const char* what) {
  if (!(p >= 1.0)) throw std::domain_error(std::string(what) + ": requires p >= 1");
  return p;
}

bool is_exact_integer(double p) {
  return p == std::floor(p) && p <= static_cast<double>(kExactOracleLimit);
}

// Index-ordered parallel evaluation; rethrows the first worker exception.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

double ball_bound(double p) {
  require_p_at_least_one(p, "ball_bound");
  return 1.0 / std::sqrt(p);
}

double c_second_branch(double p) {
  return 1.0 + sqrt5_over_6_pow(p) /
                   (std::sqrt(3.0 * M_PI) * (std::sqrt(p) - 0.5 / std::sqrt(p)));
}

double c_of_p(double p) {
  require_p_at_least_one(p, "c_of_p");
  if (p <= cached_p0()) return std::sqrt(M_PI / 3.0);
  return c_second_branch(p);
}

double improved_bound(double p) {
  require_p_at_least_one(p, "improved_bound");
  return c_of_p(p) * std::sqrt(3.0 / M_PI) / std::sqrt(p);
}

double solve_p0(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("solve_p0: tol must be positive");
  const double target = p0_rhs();
  double lo = 1.0;
  double hi = 3.0;
  if (!(p0_lhs(lo) > target && target > p0_lhs(hi)))
    throw std::runtime_error("solve_p0: defining equation lost its bracket on [1, 3]");
  // Bisect past tol all the way to machine exhaustion: the root is reused as
  // the C(p) branch point, so there is no reason to stop early.
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (p0_lhs(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

bool sandwich_check(double p, const QuadratureConfig& cfg) {
  require_p_at_least_one(p, "sandwich_check");
  const int fl = static_cast<int>(std::floor(p));
  if (fl + 1 > kExactOracleLimit)
    throw std::domain_error("sandwich_check: exact endpoints out of closed-form reach");
  const double upper = to_double(exact_lp_integer(fl));
  const double lower = to_double(exact_lp_integer(fl + 1));
  const SincNormResult mid = sinc_lp_integral(p, cfg);
  const double slack = mid.total_error + 1e-12;
  return mid.value >= lower - slack && mid.value <= upper + slack;
}

double asymptotic_ratio(double p, const QuadratureConfig& cfg) {
  require_p_at_least_one(p, "asymptotic_ratio");
  double integral;
  if (is_exact_integer(p))
    integral = to_double(exact_lp_integer(static_cast<int>(p)));
  else
    integral = sinc_lp_integral(p, cfg).value;
  return integral * std::sqrt(p) / std::sqrt(3.0 / M_PI);
}

BoundReport bound_report(double p, const QuadratureConfig& cfg) {
  require_p_at_least_one(p, "bound_report");
  BoundReport report;
  report.p = p;
  report.integral = sinc_lp_integral(p, cfg);
  report.ball_bound = ball_bound(p);
  report.c_p = c_of_p(p);
  report.improved_bound = improved_bound(p);
  report.margin_ball = report.ball_bound - report.integral.value;
  report.margin_improved = report.improved_bound - report.integral.value;
  report.asymptotic_ratio = report.integral.value * std::sqrt(p) / std::sqrt(3.0 / M_PI);
  return report;
}

std::vector<BoundReport> bound_reports(std::span<const double> grid,
                                       const QuadratureConfig& cfg) {
  std::vector<BoundReport> reports(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { reports[i] = bound_report(grid[i], cfg); });
  return reports;
}

VerificationSummary verify_suite(std::span<const double> grid, const QuadratureConfig& cfg) {
  if (grid.empty()) throw std::invalid_argument("verify_suite: grid must be nonempty");
  for (double p : grid)
    if (!(p >= 1.0)) throw std::invalid_argument("verify_suite: every grid point needs p >= 1");

  VerificationSummary summary;
  summary.grid.assign(grid.begin(), grid.end());

  struct PointData {
    BoundReport report;
    double central = 0.0;
  };
  std::vector<PointData> data(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    data[i].report = bound_report(grid[i], cfg);
    data[i].central = central_integral(grid[i], cfg);
  });

  int checks = 0;
  auto expect = [&](const char* name, double p, bool ok, double observed, double required) {
    ++checks;
    if (!ok) summary.failures.push_back({name, p, observed, required});
  };

  const double sqrt_3_pi = std::sqrt(3.0 / M_PI);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid[i];
    const BoundReport& r = data[i].report;
    const double certified = r.integral.value - r.integral.total_error;

    expect("ball_inequality", p, certified <= r.ball_bound, certified, r.ball_bound);
    expect("improved_bound", p, certified <= r.improved_bound, certified, r.improved_bound);
    expect("bound_chain", p, r.improved_bound <= r.ball_bound + 1e-15, r.improved_bound,
           r.ball_bound + 1e-15);

    const double central_bound = sqrt_3_pi / std::sqrt(p);
    expect("central_estimate", p, data[i].central - cfg.abs_tol <= central_bound,
           data[i].central - cfg.abs_tol, central_bound);

    // The two sides power non-reciprocal roundings of 6/sqrt(5), so the
    // achievable agreement degrades like (2p-1) ulp; 1e-15 holds up to p ~ 20.
    const double tail_lhs = tail_bound(p, kBallCutoff) * M_PI * (p - 0.5);
    const double tail_rhs = sqrt5_over_6_pow(p);
    const double tail_tol = std::max(1e-15, (2.0 * p - 1.0) * 2.2e-16) * tail_rhs;
    expect("tail_identity", p, std::abs(tail_lhs - tail_rhs) <= tail_tol,
           std::abs(tail_lhs - tail_rhs), tail_tol);

    const double branch = c_second_branch(p);
    const double sqrt_pi_3 = std::sqrt(M_PI / 3.0);
    if (p <= cached_p0())
      expect("c_branch", p, branch >= sqrt_pi_3 - 1e-12, branch, sqrt_pi_3 - 1e-12);
    else
      expect("c_branch", p, branch <= sqrt_pi_3 + 1e-12, branch, sqrt_pi_3 + 1e-12);

    if (p == 1.0)
      expect("equality_at_one", p,
             std::abs(r.integral.value - 1.0) <= r.integral.total_error + 1e-10,
             std::abs(r.integral.value - 1.0), r.integral.total_error + 1e-10);

    if (is_exact_integer(p)) {
      const double exact = to_double(exact_lp_integer(static_cast<int>(p)));
      expect("plancherel", p,
             std::abs(r.integral.value - exact) <= r.integral.total_error + 1e-12,
             std::abs(r.integral.value - exact), r.integral.total_error + 1e-12);
    }

    if (static_cast<int>(std::floor(p)) + 1 <= kExactOracleLimit) {
      const double upper = to_double(exact_lp_integer(static_cast<int>(std::floor(p))));
      const double lower = to_double(exact_lp_integer(static_cast<int>(std::floor(p)) + 1));
      const double slack = r.integral.total_error + 1e-12;
      expect("sandwich", p,
             r.integral.value >= lower - slack && r.integral.value <= upper + slack,
             r.integral.value, upper);
    }
  }

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const SincNormResult& a = data[i].report.integral;
    const SincNormResult& b = data[i + 1].report.integral;
    if (a.p < b.p)
      expect("monotone_decrease", b.p, a.value + a.total_error >= b.value - b.total_error,
             b.value - b.total_error, a.value + a.total_error);
  }

  double previous_gap = std::abs(asymptotic_ratio(2.0, cfg) - 1.0);
  for (int k = 2; k <= 6; ++k) {
    const double gap = std::abs(asymptotic_ratio(std::pow(2.0, k), cfg) - 1.0);
    expect("asymptotic_convergence", std::pow(2.0, k), gap < previous_gap, gap, previous_gap);
    previous_gap = gap;
  }

  summary.checks_run = checks;
  summary.passed = summary.failures.empty();
  return summary;
}

}  // namespace sinclp
