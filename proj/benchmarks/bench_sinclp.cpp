#include <benchmark/benchmark.h>

#include "sinclp/bounds.hpp"
#include "sinclp/bspline.hpp"
#include "sinclp/sinc_norm.hpp"

namespace {

using namespace sinclp;

void BM_IntegrandEval(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sinc_pow_integrand(t, p));
    t += 1e-6;
  }
}
BENCHMARK(BM_IntegrandEval)->Arg(1)->Arg(1000)->Arg(1000000);

void BM_AdaptiveQuadrature(benchmark::State& state) {
  const auto f = [](double t) { return 1.0 / (1.0 + 25.0 * t * t); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_adaptive(f, 0.0, 1.0));
}
BENCHMARK(BM_AdaptiveQuadrature);

void BM_SincLpIntegral(benchmark::State& state) {
  const double p = state.range(0) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(sinc_lp_integral(p));
}
BENCHMARK(BM_SincLpIntegral)->Arg(10)->Arg(15)->Arg(25)->Arg(100)->Arg(1000);

void BM_BsplineBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PiecewisePoly poly = make_box();
    for (int k = 0; k < n; ++k) poly = poly.convolve_box();
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_BsplineBuild)->Arg(5)->Arg(10)->Arg(20);

void BM_CentralClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(central(n));
}
BENCHMARK(BM_CentralClosedForm)->Arg(31)->Arg(199)->Arg(999);

void BM_BoundReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bound_report(2.5));
}
BENCHMARK(BM_BoundReport);

}  // namespace

BENCHMARK_MAIN();
