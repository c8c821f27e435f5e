// repstat: interval estimation for process rates and interval prediction
// for representative-sample statistics, with exact and Monte Carlo
// coverage studies.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "repstat/estimation.hpp"
#include "repstat/prediction.hpp"
#include "repstat/report.hpp"
#include "repstat/study.hpp"

namespace {

using namespace repstat;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResourceLimit = 3;

struct CiArgs {
  std::uint64_t n = 0;
  std::uint64_t y = 0;
  double alpha = 0.05;
  std::string method = "wald";
  std::string format = "table";
};

struct PiArgs {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> y;
  std::optional<double> mean;
  std::optional<double> sd;
  std::optional<std::uint64_t> rep_size;
  double alpha = 0.05;
  std::string method = "wald-fpc";
  bool snap = false;
  std::string format = "table";
};

struct CoverageArgs {
  std::string mode;
  std::string process = "bernoulli";
  double p = 0.5;
  double mu = 0.0;
  double sigma = 1.0;
  std::vector<std::uint64_t> rep_sizes;
  std::uint64_t n = 0;
  double alpha = 0.05;
  std::uint64_t replicates = 10'000;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> methods;
  bool snap = false;
  unsigned threads = 1;
  std::string format = "table";
};

struct DiagnoseArgs {
  double p = 0.5;
  std::uint64_t rep_size = 0;
  std::uint64_t n = 0;
  std::uint64_t replicates = 10'000;
  std::string scale = "true-p";
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::string format = "table";
};

OutputFormat parse_format(const std::string& name) {
  const auto fmt = format_from_string(name);
  if (!fmt)
    throw std::domain_error("unknown format '" + name +
                            "' (expected table, csv, or json)");
  return *fmt;
}

Method parse_method(const std::string& name) {
  const auto method = method_from_string(name);
  if (!method) throw std::domain_error("unknown method '" + name + "'");
  return *method;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::cerr << "note: --seed not given; using seed 0\n";
  return 0;
}

int run_ci(const CiArgs& args) {
  const Method method = parse_method(args.method);
  if (is_prediction_method(method))
    throw std::domain_error("ci accepts methods wald, wilson, "
                            "clopper-pearson");
  IntervalRecord rec;
  rec.method = method;
  rec.interval = compute_binary_interval(method, SampleSummary(args.n, args.y),
                                         std::nullopt, args.alpha);
  std::cout << render_interval(rec, parse_format(args.format));
  return kExitOk;
}

int run_pi(const PiArgs& args) {
  const Method method = parse_method(args.method);
  if (!is_prediction_method(method))
    throw std::domain_error("pi accepts methods wald-fpc, conservative, "
                            "quadratic, quadratic-nfree, mean");

  if (method_requires_rep_size(method) && !args.rep_size)
    throw std::domain_error("method '" + args.method +
                            "' requires the representative sample size --N");
  if (!method_requires_rep_size(method) && args.rep_size)
    throw std::domain_error("method '" + args.method +
                            "' is N-free; do not pass --N");

  IntervalRecord rec;
  rec.method = method;
  if (method == Method::mean) {
    if (!args.mean || !args.sd)
      throw std::domain_error("method 'mean' requires --mean and --sd");
    if (args.y)
      throw std::domain_error("method 'mean' does not take --y");
    if (args.snap)
      throw std::domain_error("--snap applies only to proportion intervals");
    rec.interval = mean_pi(MeanSummary(args.n, *args.mean, *args.sd),
                           *args.rep_size, args.alpha);
  } else {
    if (!args.y)
      throw std::domain_error("binary methods require the success count --y");
    if (args.mean || args.sd)
      throw std::domain_error("--mean/--sd apply only to method 'mean'");
    const SampleSummary summary(args.n, *args.y);
    rec.interval =
        compute_binary_interval(method, summary, args.rep_size, args.alpha);
    if (args.snap) {
      if (!args.rep_size)
        throw std::domain_error("--snap requires --N (the 1/N lattice)");
      rec.interval = snap_outward(rec.interval, *args.rep_size);
    }
  }
  if (args.rep_size)
    rec.fpc = std::sqrt(static_cast<double>(*args.rep_size - args.n) /
                        static_cast<double>(*args.rep_size));
  std::cout << render_interval(rec, parse_format(args.format));
  return kExitOk;
}

ProcessSpec parse_process(const CoverageArgs& args) {
  if (args.process == "bernoulli") return BernoulliProcess{args.p};
  if (args.process == "normal") return NormalProcess{args.mu, args.sigma};
  throw std::domain_error("unknown process '" + args.process +
                          "' (expected bernoulli or normal)");
}

int run_coverage(const CoverageArgs& args) {
  const OutputFormat fmt = parse_format(args.format);
  if (args.mode != "monte-carlo" && args.mode != "exact")
    throw std::domain_error("--mode must be monte-carlo or exact");
  if (args.rep_sizes.empty())
    throw std::domain_error("--N requires at least one value");
  std::vector<Method> methods;
  for (const std::string& name : args.methods)
    methods.push_back(parse_method(name));
  if (methods.empty()) throw std::domain_error("--methods must be non-empty");

  const bool exact = args.mode == "exact";
  const bool multi = args.rep_sizes.size() > 1;
  std::uint64_t seed = 0;
  if (!exact) seed = resolve_seed(args.seed);

  std::string out;
  for (const std::uint64_t N : args.rep_sizes) {
    CoverageReport report;
    if (exact) {
      if (args.process != "bernoulli")
        throw std::domain_error("exact mode supports only the bernoulli "
                                "process");
      if (args.n > 10'000)
        throw ResourceLimitError("exact mode limited to n <= 10000");
      if (args.n < 1 || args.n > N)
        throw std::domain_error("requires 1 <= n <= N");
      report.seed = args.seed.value_or(0);
      for (const Method m : methods)
        report.rows.push_back(exact_coverage_row(
            m, is_prediction_method(m) ? std::optional<std::uint64_t>(N)
                                       : std::nullopt,
            args.n, args.p, args.alpha, args.snap));
    } else {
      StudyConfig cfg;
      cfg.process = parse_process(args);
      cfg.rep_size = N;
      cfg.sample_size = args.n;
      cfg.alpha = args.alpha;
      cfg.replicates = args.replicates;
      cfg.seed = seed;
      cfg.methods = methods;
      cfg.snap_to_grid = args.snap;
      report = simulate_study(cfg, args.threads);
    }
    if (multi) {
      if (fmt == OutputFormat::csv)
        out += "# N=" + std::to_string(N) + "\n";
      else if (fmt == OutputFormat::table)
        out += "N " + std::to_string(N) + "\n";
    }
    out += render_report(report, fmt);
  }
  std::cout << out;
  return kExitOk;
}

int run_diagnose(const DiagnoseArgs& args) {
  const OutputFormat fmt = parse_format(args.format);
  const auto scale = gap_scale_from_string(args.scale);
  if (!scale)
    throw std::domain_error("unknown scale '" + args.scale +
                            "' (expected true-p, plug-in-n, or plug-in-N)");
  if (args.n >= args.rep_size)
    throw std::domain_error("diagnose requires n < N");

  StudyConfig cfg;
  cfg.process = BernoulliProcess{args.p};
  cfg.rep_size = args.rep_size;
  cfg.sample_size = args.n;
  cfg.replicates = args.replicates;
  cfg.seed = resolve_seed(args.seed);

  DiagnosticRecord rec;
  rec.diagnostic = limit_diagnostic(cfg, *scale, args.threads);
  rec.scale = *scale;
  rec.seed = cfg.seed;
  std::cout << render_diagnostic(rec, fmt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "repstat: confidence intervals for a process rate and prediction "
      "intervals for representative-sample statistics"};
  app.require_subcommand(1);

  CiArgs ci_args;
  CLI::App* ci = app.add_subcommand(
      "ci", "Confidence interval for the process rate p");
  ci->add_option("--n", ci_args.n, "sample size")->required();
  ci->add_option("--y", ci_args.y, "success count")->required();
  ci->add_option("--alpha", ci_args.alpha, "1 - confidence level")->capture_default_str();
  ci->add_option("--method", ci_args.method,
                 "wald | wilson | clopper-pearson")->capture_default_str();
  ci->add_option("--format", ci_args.format, "table | csv | json")->capture_default_str();

  PiArgs pi_args;
  CLI::App* pi = app.add_subcommand(
      "pi", "Prediction interval for a representative-sample statistic");
  pi->add_option("--n", pi_args.n, "sample size")->required();
  pi->add_option("--y", pi_args.y, "success count (binary methods)");
  pi->add_option("--mean", pi_args.mean, "sample mean (method 'mean')");
  pi->add_option("--sd", pi_args.sd, "sample sd, n-1 divisor (method 'mean')");
  pi->add_option("--N", pi_args.rep_size, "representative sample size");
  pi->add_option("--alpha", pi_args.alpha, "1 - level")->capture_default_str();
  pi->add_option("--method", pi_args.method,
                 "wald-fpc | conservative | quadratic | quadratic-nfree | "
                 "mean")->capture_default_str();
  pi->add_flag("--snap", pi_args.snap,
               "round endpoints outward to the 1/N lattice");
  pi->add_option("--format", pi_args.format, "table | csv | json")->capture_default_str();

  CoverageArgs cov_args;
  CLI::App* cov = app.add_subcommand(
      "coverage", "Coverage study (exact enumeration or Monte Carlo)");
  cov->add_option("--mode", cov_args.mode, "monte-carlo | exact")->required();
  cov->add_option("--process", cov_args.process, "bernoulli | normal")->capture_default_str();
  cov->add_option("--p", cov_args.p, "bernoulli rate")->capture_default_str();
  cov->add_option("--mu", cov_args.mu, "normal mean")->capture_default_str();
  cov->add_option("--sigma", cov_args.sigma, "normal sd")->capture_default_str();
  cov->add_option("--N", cov_args.rep_sizes,
                  "representative sample size(s), comma separated")
      ->required()
      ->delimiter(',');
  cov->add_option("--n", cov_args.n, "researcher's sample size")->required();
  cov->add_option("--alpha", cov_args.alpha, "1 - level")->capture_default_str();
  cov->add_option("--replicates", cov_args.replicates,
                  "Monte Carlo replicates")->capture_default_str();
  cov->add_option("--seed", cov_args.seed, "RNG seed (default 0, noticed)");
  cov->add_option("--methods", cov_args.methods,
                  "comma list of: wald, wilson, clopper-pearson, wald-fpc, "
                  "conservative, quadratic, quadratic-nfree, mean")
      ->required()
      ->delimiter(',');
  cov->add_flag("--snap", cov_args.snap,
                "snap prediction intervals outward to the 1/N lattice");
  cov->add_option("--threads", cov_args.threads, "worker threads")->capture_default_str();
  cov->add_option("--format", cov_args.format, "table | csv | json")->capture_default_str();

  DiagnoseArgs diag_args;
  CLI::App* diag = app.add_subcommand(
      "diagnose",
      "Normality diagnostic for the standardized proportion gap");
  diag->add_option("--p", diag_args.p, "bernoulli rate")->required();
  diag->add_option("--N", diag_args.rep_size, "representative sample size")
      ->required();
  diag->add_option("--n", diag_args.n, "researcher's sample size")
      ->required();
  diag->add_option("--replicates", diag_args.replicates, "replicates")->capture_default_str();
  diag->add_option("--scale", diag_args.scale,
                   "true-p | plug-in-n | plug-in-N")->capture_default_str();
  diag->add_option("--seed", diag_args.seed, "RNG seed (default 0, noticed)");
  diag->add_option("--threads", diag_args.threads, "worker threads")->capture_default_str();
  diag->add_option("--format", diag_args.format, "table | csv | json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (ci->parsed()) return run_ci(ci_args);
    if (pi->parsed()) return run_pi(pi_args);
    if (cov->parsed()) return run_coverage(cov_args);
    if (diag->parsed()) return run_diagnose(diag_args);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
