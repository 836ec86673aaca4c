#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "format.hpp"
#include "sinclp/bounds.hpp"
#include "sinclp/bspline.hpp"
#include "sinclp/sinc_norm.hpp"

namespace {

using namespace sinclp;
using cli::JsonObject;
using cli::OutputFormat;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

constexpr char kBoundsCsvHeader[] =
    "p,integral,total_error,ball_bound,c_p,improved_bound,margin_ball,margin_improved,"
    "asymptotic_ratio";

struct GridSpec {
  double start = 1.0;
  double stop = 1.0;
  double step = 1.0;

  std::vector<double> points() const {
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
    return grid;
  }
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("grid must be start:stop:step");
  std::size_t used = 0;
  try {
    g.start = std::stod(text.substr(0, c1), &used);
    if (used != c1) throw std::invalid_argument("");
    g.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1), &used);
    if (used != c2 - c1 - 1) throw std::invalid_argument("");
    g.step = std::stod(text.substr(c2 + 1), &used);
    if (used != text.size() - c2 - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("grid '" + text + "' is not three reals start:stop:step");
  }
  if (!(g.start >= 1.0)) throw std::invalid_argument("grid start must be >= 1");
  if (!(g.stop >= g.start)) throw std::invalid_argument("grid stop must be >= start");
  if (!(g.step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  return g;
}

QuadratureConfig config_for(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("--tol must be positive");
  QuadratureConfig cfg;
  cfg.abs_tol = tol;
  cfg.rel_tol = tol;
  return cfg;
}

std::string bounds_csv_row(const BoundReport& r) {
  std::string row = cli::real17(r.p);
  for (double v : {r.integral.value, r.integral.total_error, r.ball_bound, r.c_p,
                   r.improved_bound, r.margin_ball, r.margin_improved, r.asymptotic_ratio}) {
    row += ',';
    row += cli::real17(v);
  }
  return row;
}

std::string bounds_json_object(const BoundReport& r) {
  return JsonObject()
      .number("p", r.p)
      .number("integral", r.integral.value)
      .number("total_error", r.integral.total_error)
      .number("ball_bound", r.ball_bound)
      .number("c_p", r.c_p)
      .number("improved_bound", r.improved_bound)
      .number("margin_ball", r.margin_ball)
      .number("margin_improved", r.margin_improved)
      .number("asymptotic_ratio", r.asymptotic_ratio)
      .str();
}

void print_bounds_text(const BoundReport& r) {
  std::printf("p                %s\n", cli::real6(r.p).c_str());
  std::printf("integral         %s\n", cli::real6(r.integral.value).c_str());
  std::printf("total_error      %s\n", cli::real6(r.integral.total_error).c_str());
  std::printf("ball_bound       %s\n", cli::real6(r.ball_bound).c_str());
  std::printf("c_p              %s\n", cli::real6(r.c_p).c_str());
  std::printf("improved_bound   %s\n", cli::real6(r.improved_bound).c_str());
  std::printf("margin_ball      %s\n", cli::real6(r.margin_ball).c_str());
  std::printf("margin_improved  %s\n", cli::real6(r.margin_improved).c_str());
  std::printf("asymptotic_ratio %s\n", cli::real6(r.asymptotic_ratio).c_str());
}

int cmd_integral(double p, OutputFormat format, double tol) {
  const SincNormResult r = sinc_lp_integral(p, config_for(tol));
  switch (format) {
    case OutputFormat::text:
      std::printf("p            %s\n", cli::real6(r.p).c_str());
      std::printf("value        %s\n", cli::real6(r.value).c_str());
      std::printf("quad_error   %s\n", cli::real6(r.quad_error).c_str());
      std::printf("tail_bound   %s\n", cli::real6(r.tail_bound).c_str());
      std::printf("cutoff       %s\n", cli::real6(r.cutoff).c_str());
      std::printf("total_error  %s\n", cli::real6(r.total_error).c_str());
      break;
    case OutputFormat::csv:
      std::printf("p,value,quad_error,tail_bound,cutoff,total_error\n");
      std::printf("%s,%s,%s,%s,%s,%s\n", cli::real17(r.p).c_str(), cli::real17(r.value).c_str(),
                  cli::real17(r.quad_error).c_str(), cli::real17(r.tail_bound).c_str(),
                  cli::real17(r.cutoff).c_str(), cli::real17(r.total_error).c_str());
      break;
    case OutputFormat::json:
      std::printf("%s\n", JsonObject()
                              .number("p", r.p)
                              .number("value", r.value)
                              .number("quad_error", r.quad_error)
                              .number("tail_bound", r.tail_bound)
                              .number("cutoff", r.cutoff)
                              .number("total_error", r.total_error)
                              .str()
                              .c_str());
      break;
  }
  return 0;
}

int cmd_bounds(double p, OutputFormat format, double tol) {
  const BoundReport r = bound_report(p, config_for(tol));
  switch (format) {
    case OutputFormat::text:
      print_bounds_text(r);
      break;
    case OutputFormat::csv:
      std::printf("%s\n%s\n", kBoundsCsvHeader, bounds_csv_row(r).c_str());
      break;
    case OutputFormat::json:
      std::printf("%s\n", bounds_json_object(r).c_str());
      break;
  }
  return 0;
}

int cmd_p0(OutputFormat format) {
  const double p0 = solve_p0(1e-12);
  const double lhs = std::pow(std::sqrt(5.0) / 6.0, 2.0 * p0 - 1.0) /
                     (std::sqrt(p0) - 0.5 / std::sqrt(p0));
  const double residual = lhs - M_PI * (1.0 - std::sqrt(3.0 / M_PI));
  switch (format) {
    case OutputFormat::text:
      std::printf("p0       %s\n", cli::real12(p0).c_str());
      std::printf("residual %s\n", cli::real6(residual).c_str());
      break;
    case OutputFormat::csv:
      std::printf("p0,residual\n%s,%s\n", cli::real17(p0).c_str(),
                  cli::real17(residual).c_str());
      break;
    case OutputFormat::json:
      std::printf("%s\n",
                  JsonObject().number("p0", p0).number("residual", residual).str().c_str());
      break;
  }
  return 0;
}

int cmd_table(const GridSpec& grid, OutputFormat format, double tol) {
  const std::vector<double> points = grid.points();
  const std::vector<BoundReport> reports = bound_reports(points, config_for(tol));
  switch (format) {
    case OutputFormat::text:
      std::printf("%-10s %-12s %-12s %-12s %-12s %-12s\n", "p", "integral", "ball_bound",
                  "improved", "margin_ball", "ratio");
      for (const BoundReport& r : reports)
        std::printf("%-10s %-12s %-12s %-12s %-12s %-12s\n", cli::real6(r.p).c_str(),
                    cli::real6(r.integral.value).c_str(), cli::real6(r.ball_bound).c_str(),
                    cli::real6(r.improved_bound).c_str(), cli::real6(r.margin_ball).c_str(),
                    cli::real6(r.asymptotic_ratio).c_str());
      break;
    case OutputFormat::csv:
      std::printf("%s\n", kBoundsCsvHeader);
      for (const BoundReport& r : reports) std::printf("%s\n", bounds_csv_row(r).c_str());
      break;
    case OutputFormat::json: {
      std::string out = "[";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += ",";
        out += bounds_json_object(reports[i]);
      }
      out += "]";
      std::printf("%s\n", out.c_str());
      break;
    }
  }
  return 0;
}

int cmd_bspline(int n, const std::string& x_text, OutputFormat format) {
  const Rational x = parse_rational(x_text);
  const Rational via_recursion = eval(bspline(n), x);
  const Rational via_closed_form = closed_form_eval(n, x);
  if (via_recursion != via_closed_form) {
    std::fprintf(stderr, "oracle disagreement at beta^%d(%s): recursion %s vs closed form %s\n",
                 n, to_fraction_string(x).c_str(), to_fraction_string(via_recursion).c_str(),
                 to_fraction_string(via_closed_form).c_str());
    return kExitVerificationFailure;
  }
  const std::string fraction = to_fraction_string(via_recursion);
  const std::string decimal = via_recursion == 0 ? "0" : to_decimal_string(via_recursion, 17);
  switch (format) {
    case OutputFormat::text:
      std::printf("beta^%d(%s) = %s = %s\n", n, to_fraction_string(x).c_str(), fraction.c_str(),
                  decimal.c_str());
      break;
    case OutputFormat::csv:
      std::printf("n,x,value,decimal\n%d,%s,%s,%s\n", n, to_fraction_string(x).c_str(),
                  fraction.c_str(), decimal.c_str());
      break;
    case OutputFormat::json:
      std::printf("%s\n", JsonObject()
                              .raw("n", std::to_string(n))
                              .string("x", to_fraction_string(x))
                              .string("value", fraction)
                              .raw("decimal", decimal)
                              .str()
                              .c_str());
      break;
  }
  return 0;
}

int cmd_verify(const GridSpec& grid, double tol) {
  const std::vector<double> points = grid.points();
  const VerificationSummary summary = verify_suite(points, config_for(tol));
  for (const VerificationFailure& f : summary.failures)
    std::printf("%s %s %s %s\n", f.check.c_str(), cli::real17(f.p).c_str(),
                cli::real17(f.observed).c_str(), cli::real17(f.required).c_str());
  std::printf("%s: %d checks across %zu grid points, %zu failures\n",
              summary.passed ? "ok" : "FAILED", summary.checks_run, points.size(),
              summary.failures.size());
  return summary.passed ? 0 : kExitVerificationFailure;
}

int cmd_asymptote(int n_max, OutputFormat format) {
  if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");

  struct RatioRow {
    int p;
    Rational integral;
    double bound;
    double ratio;
  };
  std::vector<RatioRow> ratios;
  for (int p = 1; p <= n_max; p *= 2) {
    RatioRow row;
    row.p = p;
    row.integral = exact_lp_integer(p);
    row.bound = std::sqrt(3.0 / M_PI) / std::sqrt(static_cast<double>(p));
    row.ratio = to_double(row.integral) / row.bound;
    ratios.push_back(std::move(row));
  }

  std::vector<std::pair<int, double>> deviations;
  std::vector<double> grid(61);
  for (int i = 0; i < 61; ++i) grid[i] = -3.0 + 0.1 * i;
  for (int n : {10, 20, 40})
    if (n <= n_max) deviations.emplace_back(n, gaussian_profile_deviation(n, grid));

  switch (format) {
    case OutputFormat::text:
      std::printf("%-8s %-22s %-12s %-12s\n", "p", "integral", "bound", "ratio");
      for (const RatioRow& r : ratios)
        std::printf("%-8d %-22s %-12s %-12s\n", r.p,
                    to_decimal_string(r.integral, 17).c_str(), cli::real6(r.bound).c_str(),
                    cli::real6(r.ratio).c_str());
      if (!deviations.empty()) {
        std::printf("\n%-8s %-12s\n", "n", "gauss_dev");
        for (const auto& [n, dev] : deviations)
          std::printf("%-8d %-12s\n", n, cli::real6(dev).c_str());
      }
      break;
    case OutputFormat::csv:
      std::printf("kind,index,value,bound,ratio\n");
      for (const RatioRow& r : ratios)
        std::printf("ratio,%d,%s,%s,%s\n", r.p, to_decimal_string(r.integral, 17).c_str(),
                    cli::real17(r.bound).c_str(), cli::real17(r.ratio).c_str());
      for (const auto& [n, dev] : deviations)
        std::printf("gaussian_deviation,%d,%s,,\n", n, cli::real17(dev).c_str());
      break;
    case OutputFormat::json: {
      std::string out = "{\"ratios\":[";
      for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (i) out += ",";
        out += JsonObject()
                   .raw("p", std::to_string(ratios[i].p))
                   .string("integral", to_fraction_string(ratios[i].integral))
                   .raw("integral_decimal", to_decimal_string(ratios[i].integral, 17))
                   .number("bound", ratios[i].bound)
                   .number("ratio", ratios[i].ratio)
                   .str();
      }
      out += "],\"gaussian_deviations\":[";
      for (std::size_t i = 0; i < deviations.size(); ++i) {
        if (i) out += ",";
        out += JsonObject()
                   .raw("n", std::to_string(deviations[i].first))
                   .number("deviation", deviations[i].second)
                   .str();
      }
      out += "]}";
      std::printf("%s\n", out.c_str());
      break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified L_p sinc-norm integrals, exact B-splines and bound verification"};
  app.require_subcommand(1);

  std::string format_text = "text";
  double tol = 1e-12;
  double p = 1.0;
  std::string grid_text;
  int n = 0;
  std::string x_text = "0";
  int n_max = 1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "Output format: text, csv or json")
        ->default_val("text");
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "Absolute tolerance target")->default_val(1e-12);
  };

  CLI::App* integral = app.add_subcommand("integral", "I(p) with a certified error budget");
  integral->add_option("--p", p, "Exponent p >= 1")->required();
  add_format(integral);
  add_tol(integral);

  CLI::App* bounds = app.add_subcommand("bounds", "Bound report at a single p");
  bounds->add_option("--p", p, "Exponent p >= 1")->required();
  add_format(bounds);
  add_tol(bounds);

  CLI::App* p0 = app.add_subcommand("p0", "Branch point of C(p) and its residual");
  add_format(p0);

  CLI::App* table = app.add_subcommand("table", "Bound reports over a p-grid");
  table->add_option("--grid", grid_text, "Grid start:stop:step with start >= 1")->required();
  add_format(table);
  add_tol(table);

  CLI::App* bspline_cmd = app.add_subcommand("bspline", "Exact beta^n(x), dual-checked");
  bspline_cmd->add_option("--n", n, "Spline order n >= 0")->required();
  bspline_cmd->add_option("--x", x_text, "Evaluation point as a rational literal a/b")
      ->required();
  add_format(bspline_cmd);

  CLI::App* verify = app.add_subcommand("verify", "Run every bound check over a p-grid");
  verify->add_option("--grid", grid_text, "Grid start:stop:step with start >= 1")->required();
  add_tol(verify);

  CLI::App* asymptote = app.add_subcommand("asymptote", "Exact asymptotic-ratio table");
  asymptote->add_option("--n-max", n_max, "Largest power-of-two p")->required();
  add_format(asymptote);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    const OutputFormat format = sinclp::cli::parse_format(format_text);
    if (integral->parsed()) return cmd_integral(p, format, tol);
    if (bounds->parsed()) return cmd_bounds(p, format, tol);
    if (p0->parsed()) return cmd_p0(format);
    if (table->parsed()) return cmd_table(parse_grid(grid_text), format, tol);
    if (bspline_cmd->parsed()) {
      if (n < 0) throw std::invalid_argument("--n must be >= 0");
      return cmd_bspline(n, x_text, format);
    }
    if (verify->parsed()) return cmd_verify(parse_grid(grid_text), tol);
    if (asymptote->parsed()) return cmd_asymptote(n_max, format);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
