#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnf/analytic.hpp"
#include "cnf/core.hpp"
#include "cnf/io.hpp"
#include "cnf/metrics.hpp"
#include "cnf/oracle.hpp"

namespace {

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + out_path);
  }
  file << payload;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = (comma == std::string::npos) ? text.size() : comma;
    out.push_back(cnf::parse_angle(text.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) {
    throw std::invalid_argument("empty list: " + text);
  }
  return out;
}

// Builds parameters for one lambda of the requested regime, defaulting the
// launch angle to the regime's anchor, and insists the pair really lands
// in that regime.
cnf::TrackParams checked_params(cnf::CaseKind kind, double lambda,
                                const std::string& theta0_text) {
  double theta0 = 0.0;
  if (!theta0_text.empty()) {
    theta0 = cnf::parse_angle(theta0_text);
  } else {
    theta0 = cnf::canonical_theta0(kind, lambda);
  }
  const cnf::TrackParams params = cnf::make_params(lambda, theta0);
  if (cnf::classify(params).kind != kind) {
    throw std::invalid_argument("case/lambda mismatch");
  }
  return params;
}

struct TraceArgs {
  std::string case_text;
  double lambda = 0.0;
  std::string theta0;
  std::string lo, hi;
  int samples = 1000;
  std::string format = "csv";
  bool physical = false;
  double v0 = 20.0;
  double g = 9.81;
  std::string out;
};

struct MetricsArgs {
  double lambda = 0.0;
  double v0 = 20.0;
  double g = 9.81;
  std::string out;
};

struct VerifyArgs {
  std::string case_text;
  double lambda = 0.0;
  std::string theta0;
  int samples = 1000;
  std::string out;
};

struct ClassifyArgs {
  double lambda = 0.0;
  std::string theta0;
  std::string out;
};

struct PlotArgs {
  std::string case_text;
  std::string lambdas;
  std::string lo, hi;
  int samples = 1000;
  double v0 = 20.0;
  double g = 9.81;
  std::string out;
};

cnf::AnomalyRange resolve_range(const cnf::CaseClass& cls,
                                const cnf::TrackParams& params,
                                const std::string& lo_text,
                                const std::string& hi_text, int samples) {
  if (lo_text.empty() != hi_text.empty()) {
    throw std::invalid_argument("--lo and --hi must be given together");
  }
  if (lo_text.empty()) {
    return cnf::default_range(cls, params, samples);
  }
  return cnf::AnomalyRange{cnf::parse_angle(lo_text), cnf::parse_angle(hi_text),
                           samples};
}

int run_trace(const TraceArgs& args) {
  const cnf::CaseKind kind = cnf::parse_case(args.case_text);
  const cnf::TrackParams params = checked_params(kind, args.lambda, args.theta0);
  const cnf::CaseClass cls = cnf::classify(params);
  const cnf::AnomalyRange range =
      resolve_range(cls, params, args.lo, args.hi, args.samples);
  std::vector<cnf::TrackSample> samples = cnf::trace(cls, params, range);
  if (args.physical) {
    const cnf::PhysicalScale scale{args.v0, args.g};
    for (cnf::TrackSample& smp : samples) {
      smp = cnf::to_physical(smp, scale);
    }
  }
  if (args.format == "json") {
    emit(cnf::trace_json(samples, params, cls, range), args.out);
  } else {
    emit(cnf::trace_csv(samples), args.out);
  }
  return 0;
}

int run_metrics(const MetricsArgs& args) {
  const cnf::PhysicalScale scale{args.v0, args.g};
  const cnf::LoopMetrics metrics = cnf::loop_metrics(args.lambda, scale);
  emit(cnf::metrics_json(args.lambda, scale, metrics), args.out);
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const cnf::CaseKind kind = cnf::parse_case(args.case_text);
  const cnf::TrackParams params = checked_params(kind, args.lambda, args.theta0);
  const cnf::CaseClass cls = cnf::classify(params);
  cnf::ToleranceConfig config;
  config.samples = args.samples;
  const cnf::VerificationReport report = cnf::verify(cls, params, config);
  emit(cnf::report_json(report), args.out);
  return report.passed ? 0 : 3;
}

int run_classify(const ClassifyArgs& args) {
  const cnf::TrackParams params =
      cnf::make_params(args.lambda, cnf::parse_angle(args.theta0));
  const cnf::CaseClass cls = cnf::classify(params);
  emit(cnf::classify_json(params, cls), args.out);
  return 0;
}

int run_plot(const PlotArgs& args) {
  const cnf::CaseKind kind = cnf::parse_case(args.case_text);
  const std::vector<double> lambdas = parse_double_list(args.lambdas);
  const cnf::PhysicalScale scale{args.v0, args.g};
  const double length_unit = scale.v0 * scale.v0 / scale.g;
  std::vector<cnf::Polyline> curves;
  curves.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const cnf::TrackParams params = checked_params(kind, lambda, "");
    const cnf::CaseClass cls = cnf::classify(params);
    const cnf::AnomalyRange range =
        resolve_range(cls, params, args.lo, args.hi, args.samples);
    const std::vector<cnf::TrackSample> samples = cnf::trace(cls, params, range);
    cnf::Polyline curve;
    curve.lambda = lambda;
    curve.xs.reserve(samples.size());
    curve.ys.reserve(samples.size());
    for (const cnf::TrackSample& smp : samples) {
      curve.xs.push_back(smp.x * length_unit);
      curve.ys.push_back(smp.y * length_unit);
    }
    curves.push_back(std::move(curve));
  }
  emit(cnf::plot_svg(curves), args.out);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-normal-force track curves: closed-form traces, loop "
               "metrics, independent verification, regime classification and "
               "SVG figures."};
  app.require_subcommand(1);

  TraceArgs trace_args;
  CLI::App* trace_cmd =
      app.add_subcommand("trace", "Sample a track as CSV or JSON");
  trace_cmd->add_option("--case", trace_args.case_text, "Regime: 1..5 or line")
      ->required();
  trace_cmd->add_option("--lambda", trace_args.lambda, "Load factor N/(m g)")
      ->required();
  trace_cmd->add_option("--theta0", trace_args.theta0,
                        "Launch angle in radians (accepts pi-literals); "
                        "defaults to the regime's anchor");
  trace_cmd->add_option("--lo", trace_args.lo, "Range start in the case parameter");
  trace_cmd->add_option("--hi", trace_args.hi, "Range end in the case parameter");
  trace_cmd->add_option("--samples", trace_args.samples, "Sample count (>= 2)");
  trace_cmd->add_option("--format", trace_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  trace_cmd->add_flag("--physical", trace_args.physical,
                      "Emit SI units (meters, seconds) instead of "
                      "dimensionless values");
  trace_cmd->add_option("--v0", trace_args.v0, "Reference speed, m/s");
  trace_cmd->add_option("--g", trace_args.g, "Gravity, m/s^2");
  trace_cmd->add_option("-o,--out", trace_args.out, "Output file (default stdout)");

  MetricsArgs metrics_args;
  CLI::App* metrics_cmd =
      app.add_subcommand("metrics", "Loop ride metrics in SI units (lambda > 1)");
  metrics_cmd->add_option("--lambda", metrics_args.lambda, "Load factor")
      ->required();
  metrics_cmd->add_option("--v0", metrics_args.v0, "Speed at the loop bottom, m/s");
  metrics_cmd->add_option("--g", metrics_args.g, "Gravity, m/s^2");
  metrics_cmd->add_option("-o,--out", metrics_args.out, "Output file");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Independent numerical verification of one parameter set");
  verify_cmd->add_option("--case", verify_args.case_text, "Regime: 1..5 or line")
      ->required();
  verify_cmd->add_option("--lambda", verify_args.lambda, "Load factor")
      ->required();
  verify_cmd->add_option("--theta0", verify_args.theta0, "Launch angle override");
  verify_cmd->add_option("--samples", verify_args.samples, "Trace resolution");
  verify_cmd->add_option("-o,--out", verify_args.out, "Output file");

  ClassifyArgs classify_args;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Map (lambda, theta0) to its regime");
  classify_cmd->add_option("--lambda", classify_args.lambda, "Load factor")
      ->required();
  classify_cmd
      ->add_option("--theta0", classify_args.theta0,
                   "Launch angle in radians (accepts pi-literals)")
      ->required();
  classify_cmd->add_option("-o,--out", classify_args.out, "Output file");

  PlotArgs plot_args;
  CLI::App* plot_cmd =
      app.add_subcommand("plot", "Standalone SVG figure, one curve per lambda");
  plot_cmd->add_option("--case", plot_args.case_text, "Regime: 1..5 or line")
      ->required();
  plot_cmd
      ->add_option("--lambda", plot_args.lambdas,
                   "Comma-separated load factors, e.g. 2,4")
      ->required();
  plot_cmd->add_option("--lo", plot_args.lo, "Range start in the case parameter");
  plot_cmd->add_option("--hi", plot_args.hi, "Range end in the case parameter");
  plot_cmd->add_option("--samples", plot_args.samples, "Points per curve");
  plot_cmd->add_option("--v0", plot_args.v0, "Reference speed, m/s");
  plot_cmd->add_option("--g", plot_args.g, "Gravity, m/s^2");
  plot_cmd->add_option("-o,--out", plot_args.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e); // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(trace_cmd)) return run_trace(trace_args);
    if (app.got_subcommand(metrics_cmd)) return run_metrics(metrics_args);
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_args);
    if (app.got_subcommand(classify_cmd)) return run_classify(classify_args);
    if (app.got_subcommand(plot_cmd)) return run_plot(plot_args);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
