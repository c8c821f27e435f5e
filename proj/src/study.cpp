#include "repstat/study.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "repstat/dist.hpp"
#include "repstat/estimation.hpp"

namespace repstat {

namespace {

constexpr std::uint64_t kChunk = 1024;  // replicates per aggregation chunk
constexpr std::uint64_t kExactCiMaxN = 10'000;
constexpr std::uint64_t kExactPiMaxN = 500;

void validate_config(const StudyConfig& cfg) {
  if (cfg.sample_size < 1 || cfg.sample_size > cfg.rep_size)
    throw std::domain_error("requires 1 <= n <= N");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw std::domain_error("alpha must lie in (0, 1)");
  if (cfg.replicates < 1)
    throw std::domain_error("replicates must be >= 1");
  if (cfg.methods.empty())
    throw std::domain_error("at least one method must be selected");
  for (std::size_t i = 0; i < cfg.methods.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.methods.size(); ++j)
      if (cfg.methods[i] == cfg.methods[j])
        throw std::domain_error("duplicate method in selection");

  if (std::holds_alternative<BernoulliProcess>(cfg.process)) {
    const double p = std::get<BernoulliProcess>(cfg.process).p;
    if (!(p >= 0.0 && p <= 1.0))
      throw std::domain_error("bernoulli rate p must lie in [0, 1]");
    for (Method m : cfg.methods)
      if (m == Method::mean)
        throw std::domain_error(
            "method 'mean' requires a normal process");
  } else {
    const auto& np = std::get<NormalProcess>(cfg.process);
    if (!(np.sigma > 0.0))
      throw std::domain_error("normal sigma must be > 0");
    for (Method m : cfg.methods)
      if (m != Method::mean)
        throw std::domain_error(
            "binary interval methods require a bernoulli process");
    if (cfg.sample_size < 2)
      throw std::domain_error("method 'mean' requires n >= 2");
  }
}

// Fixed-size chunks keep floating-point aggregation order independent of
// the number of worker threads: partial sums are folded in chunk order.
template <typename PerReplicate>
void run_chunked(std::uint64_t replicates, unsigned threads,
                 PerReplicate&& body) {
  const std::uint64_t n_chunks = (replicates + kChunk - 1) / kChunk;
  unsigned workers = std::max(1u, threads);
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, n_chunks));

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      const std::uint64_t begin = c * kChunk;
      const std::uint64_t end = std::min(replicates, begin + kChunk);
      body(c, begin, end);
    }
  };

  if (workers == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

struct MethodAccum {
  std::uint64_t covered = 0;
  double width_sum = 0.0;
  std::uint64_t degenerate = 0;
};

CoverageRow finish_row(Method method, double alpha, double coverage,
                       double coverage_se, double mean_width,
                       std::uint64_t replicates_used,
                       std::uint64_t degenerate_count) {
  CoverageRow row;
  row.method = method;
  row.target = method == Method::mean ? IntervalTarget::statistic_mean_N
               : is_prediction_method(method) ? IntervalTarget::statistic_p_N
                                              : IntervalTarget::parameter_p;
  row.kind = is_prediction_method(method) ? IntervalKind::prediction
                                          : IntervalKind::confidence;
  row.nominal_level = 1.0 - alpha;
  row.coverage = coverage;
  row.coverage_se = coverage_se;
  row.mean_width = mean_width;
  row.replicates_used = replicates_used;
  row.degenerate_count = degenerate_count;
  return row;
}

CoverageReport simulate_binary_study(const StudyConfig& cfg,
                                     unsigned threads) {
  const double p = std::get<BernoulliProcess>(cfg.process).p;
  const std::uint64_t N = cfg.rep_size;
  const std::uint64_t n = cfg.sample_size;
  const std::uint64_t R = cfg.replicates;
  const std::size_t n_methods = cfg.methods.size();

  // Every binary interval depends on the data only through y, so all
  // replicate intervals come from one table per method.
  std::vector<std::vector<Interval>> tables(n_methods);
  for (std::size_t m = 0; m < n_methods; ++m) {
    tables[m].reserve(n + 1);
    for (std::uint64_t y = 0; y <= n; ++y) {
      Interval iv = compute_binary_interval(cfg.methods[m],
                                            SampleSummary(n, y), N, cfg.alpha);
      if (cfg.snap_to_grid && iv.target == IntervalTarget::statistic_p_N)
        iv = snap_outward(iv, N);
      tables[m].push_back(iv);
    }
  }

  const std::uint64_t n_chunks = (R + kChunk - 1) / kChunk;
  std::vector<std::vector<MethodAccum>> chunk_acc(
      n_chunks, std::vector<MethodAccum>(n_methods));

  run_chunked(R, threads, [&](std::uint64_t c, std::uint64_t begin,
                              std::uint64_t end) {
    auto& acc = chunk_acc[c];
    for (std::uint64_t r = begin; r < end; ++r) {
      Rng rng(cfg.seed, r);
      const std::uint64_t rep_successes = sample_binomial(rng, N, p);
      const std::uint64_t y = sample_hypergeometric(rng, N, rep_successes, n);
      const double p_hat_N =
          static_cast<double>(rep_successes) / static_cast<double>(N);
      for (std::size_t m = 0; m < n_methods; ++m) {
        const Interval& iv = tables[m][y];
        const double target =
            iv.target == IntervalTarget::statistic_p_N ? p_hat_N : p;
        acc[m].covered += iv.contains(target) ? 1 : 0;
        acc[m].width_sum += iv.width();
        acc[m].degenerate += iv.degenerate ? 1 : 0;
      }
    }
  });

  CoverageReport report;
  report.seed = cfg.seed;
  for (std::size_t m = 0; m < n_methods; ++m) {
    MethodAccum total;
    for (const auto& acc : chunk_acc) {
      total.covered += acc[m].covered;
      total.width_sum += acc[m].width_sum;
      total.degenerate += acc[m].degenerate;
    }
    const double coverage =
        static_cast<double>(total.covered) / static_cast<double>(R);
    const double se =
        std::sqrt(coverage * (1.0 - coverage) / static_cast<double>(R));
    report.rows.push_back(finish_row(
        cfg.methods[m], cfg.alpha, coverage, se,
        total.width_sum / static_cast<double>(R), R, total.degenerate));
  }
  return report;
}

CoverageReport simulate_normal_study(const StudyConfig& cfg,
                                     unsigned threads) {
  const auto& process = std::get<NormalProcess>(cfg.process);
  const std::uint64_t N = cfg.rep_size;
  const std::uint64_t n = cfg.sample_size;
  const std::uint64_t R = cfg.replicates;

  const std::uint64_t n_chunks = (R + kChunk - 1) / kChunk;
  std::vector<MethodAccum> chunk_acc(n_chunks);

  run_chunked(R, threads, [&](std::uint64_t c, std::uint64_t begin,
                              std::uint64_t end) {
    std::vector<double> values(N);
    MethodAccum& acc = chunk_acc[c];
    for (std::uint64_t r = begin; r < end; ++r) {
      Rng rng(cfg.seed, r);
      double rep_sum = 0.0;
      for (std::uint64_t i = 0; i < N; ++i) {
        values[i] = process.mu + process.sigma * rng.next_normal();
        rep_sum += values[i];
      }
      const double rep_mean = rep_sum / static_cast<double>(N);

      const std::vector<std::uint64_t> idx = sample_srs(rng, N, n);
      double sum = 0.0;
      for (const std::uint64_t i : idx) sum += values[i];
      const double mean = sum / static_cast<double>(n);
      double ss = 0.0;
      for (const std::uint64_t i : idx) {
        const double d = values[i] - mean;
        ss += d * d;
      }
      const double sd = std::sqrt(ss / static_cast<double>(n - 1));

      const Interval iv =
          mean_pi(MeanSummary(n, mean, sd), N, cfg.alpha);
      acc.covered += iv.contains(rep_mean) ? 1 : 0;
      acc.width_sum += iv.width();
      acc.degenerate += iv.degenerate ? 1 : 0;
    }
  });

  MethodAccum total;
  for (const auto& acc : chunk_acc) {
    total.covered += acc.covered;
    total.width_sum += acc.width_sum;
    total.degenerate += acc.degenerate;
  }
  const double coverage =
      static_cast<double>(total.covered) / static_cast<double>(R);
  const double se =
      std::sqrt(coverage * (1.0 - coverage) / static_cast<double>(R));

  CoverageReport report;
  report.seed = cfg.seed;
  report.rows.push_back(finish_row(Method::mean, cfg.alpha, coverage, se,
                                   total.width_sum / static_cast<double>(R),
                                   R, total.degenerate));
  return report;
}

}  // namespace

Interval compute_binary_interval(Method method, const SampleSummary& summary,
                                 std::optional<std::uint64_t> rep_size,
                                 double alpha) {
  switch (method) {
    case Method::wald:
      return wald_ci(summary, alpha);
    case Method::wilson:
      return wilson_ci(summary, alpha);
    case Method::clopper_pearson:
      return clopper_pearson_ci(summary, alpha);
    case Method::conservative:
      return conservative_pi(summary, alpha);
    case Method::quadratic_nfree:
      return quadratic_pi_nfree(summary, alpha);
    case Method::wald_fpc:
    case Method::quadratic:
      if (!rep_size)
        throw std::domain_error(std::string(to_string(method)) +
                                " requires the representative sample size N");
      return method == Method::wald_fpc
                 ? wald_fpc_pi(summary, *rep_size, alpha)
                 : quadratic_pi(summary, *rep_size, alpha);
    case Method::mean:
      break;
  }
  throw std::invalid_argument("method 'mean' is not a binary-sample method");
}

CoverageReport simulate_study(const StudyConfig& config, unsigned threads) {
  validate_config(config);
  if (std::holds_alternative<BernoulliProcess>(config.process))
    return simulate_binary_study(config, threads);
  return simulate_normal_study(config, threads);
}

double exact_ci_coverage(Method method, std::uint64_t n, double p,
                         double alpha) {
  if (is_prediction_method(method))
    throw std::invalid_argument(
        "exact_ci_coverage expects a confidence-interval method");
  if (n > kExactCiMaxN)
    throw ResourceLimitError("exact CI coverage limited to n <= 10000");
  if (n < 1) throw std::domain_error("requires n >= 1");
  long double cover = 0.0L;
  for (std::uint64_t y = 0; y <= n; ++y) {
    const Interval iv =
        compute_binary_interval(method, SampleSummary(n, y), std::nullopt,
                                alpha);
    if (iv.contains(p)) cover += binom_pmf(n, p, y);
  }
  return std::min(static_cast<double>(cover), 1.0);
}

double exact_pi_coverage(Method method, std::uint64_t rep_size,
                         std::uint64_t n, double p, double alpha,
                         bool snap_to_grid) {
  if (!is_prediction_method(method) || method == Method::mean)
    throw std::invalid_argument(
        "exact_pi_coverage expects a binary prediction-interval method");
  if (rep_size > kExactPiMaxN)
    throw ResourceLimitError("exact PI coverage limited to N <= 500");
  if (n < 1 || n > rep_size) throw std::domain_error("requires 1 <= n <= N");

  std::vector<Interval> intervals;
  intervals.reserve(n + 1);
  for (std::uint64_t y = 0; y <= n; ++y) {
    Interval iv = compute_binary_interval(method, SampleSummary(n, y),
                                          rep_size, alpha);
    if (snap_to_grid) iv = snap_outward(iv, rep_size);
    intervals.push_back(iv);
  }

  const double N = static_cast<double>(rep_size);
  long double cover = 0.0L;
  for (std::uint64_t k = 0; k <= rep_size; ++k) {
    const double pk = binom_pmf(rep_size, p, k);
    if (pk == 0.0) continue;
    const double p_hat_N = static_cast<double>(k) / N;
    const std::uint64_t y_lo = (n + k > rep_size) ? n + k - rep_size : 0;
    const std::uint64_t y_hi = std::min(n, k);
    long double inner = 0.0L;
    for (std::uint64_t y = y_lo; y <= y_hi; ++y)
      if (intervals[y].contains(p_hat_N)) inner += hyper_pmf(rep_size, k, n, y);
    cover += pk * inner;
  }
  return std::min(static_cast<double>(cover), 1.0);
}

CoverageRow exact_coverage_row(Method method,
                               std::optional<std::uint64_t> rep_size,
                               std::uint64_t n, double p, double alpha,
                               bool snap_to_grid) {
  double coverage = 0.0;
  if (is_prediction_method(method)) {
    if (!rep_size)
      throw std::domain_error(
          "exact prediction coverage requires the representative sample "
          "size N");
    coverage = exact_pi_coverage(method, *rep_size, n, p, alpha, snap_to_grid);
  } else {
    coverage = exact_ci_coverage(method, n, p, alpha);
  }

  // Exact mean width under the Binomial(n, p) law of the observed count
  // (the marginal law of y whether or not conditioning on the
  // representative sample).
  long double width = 0.0L;
  for (std::uint64_t y = 0; y <= n; ++y) {
    Interval iv =
        compute_binary_interval(method, SampleSummary(n, y), rep_size, alpha);
    if (snap_to_grid && rep_size && iv.target == IntervalTarget::statistic_p_N)
      iv = snap_outward(iv, *rep_size);
    width += binom_pmf(n, p, y) * iv.width();
  }

  return finish_row(method, alpha, coverage, 0.0,
                    static_cast<double>(width), 0, 0);
}

LimitDiagnostic limit_diagnostic(const StudyConfig& config, GapScale scale,
                                 unsigned threads) {
  if (!std::holds_alternative<BernoulliProcess>(config.process))
    throw std::domain_error("limit diagnostic requires a bernoulli process");
  StudyConfig cfg = config;
  if (cfg.methods.empty()) cfg.methods.push_back(Method::conservative);
  validate_config(cfg);
  if (cfg.sample_size >= cfg.rep_size)
    throw std::domain_error("limit diagnostic requires n < N");

  const double p = std::get<BernoulliProcess>(cfg.process).p;
  const std::uint64_t N = cfg.rep_size;
  const std::uint64_t n = cfg.sample_size;
  const std::uint64_t R = cfg.replicates;

  constexpr double kExcluded = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> stats(R, kExcluded);

  run_chunked(R, threads, [&](std::uint64_t, std::uint64_t begin,
                              std::uint64_t end) {
    for (std::uint64_t r = begin; r < end; ++r) {
      Rng rng(cfg.seed, r);
      const std::uint64_t rep_successes = sample_binomial(rng, N, p);
      const std::uint64_t y = sample_hypergeometric(rng, N, rep_successes, n);
      const double p_hat_n =
          static_cast<double>(y) / static_cast<double>(n);
      const double p_hat_N =
          static_cast<double>(rep_successes) / static_cast<double>(N);
      double v = 0.0;
      switch (scale) {
        case GapScale::true_p:
          v = p * (1.0 - p);
          break;
        case GapScale::plug_in_sample:
          v = p_hat_n * (1.0 - p_hat_n);
          break;
        case GapScale::plug_in_rep:
          v = p_hat_N * (1.0 - p_hat_N);
          break;
      }
      if (v > 0.0)
        stats[r] = standardized_gap(p_hat_n, p_hat_N, n, N, scale, p);
    }
  });

  std::vector<double> values;
  values.reserve(R);
  for (const double s : stats)
    if (!std::isnan(s)) values.push_back(s);

  LimitDiagnostic diag;
  diag.used = values.size();
  diag.excluded = R - values.size();
  if (values.empty()) {
    diag.ks_stat = 1.0;
    return diag;
  }

  double sum = 0.0;
  for (const double v : values) sum += v;
  diag.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (const double v : values) {
    const double d = v - diag.mean;
    ss += d * d;
  }
  diag.variance = values.size() > 1
                      ? ss / static_cast<double>(values.size() - 1)
                      : 0.0;

  std::sort(values.begin(), values.end());
  const double m = static_cast<double>(values.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double cdf = norm_cdf(values[i]);
    ks = std::max(ks, cdf - static_cast<double>(i) / m);
    ks = std::max(ks, static_cast<double>(i + 1) / m - cdf);
  }
  diag.ks_stat = ks;
  return diag;
}

double marginal_check(std::uint64_t rep_size, std::uint64_t n, double p) {
  if (rep_size > 40)
    throw std::domain_error("marginal check limited to N <= 40");
  if (n < 1 || n > rep_size) throw std::domain_error("requires 1 <= n <= N");
  double worst = 0.0;
  for (std::uint64_t y = 0; y <= n; ++y) {
    long double mixed = 0.0L;
    for (std::uint64_t k = 0; k <= rep_size; ++k)
      mixed += binom_pmf(rep_size, p, k) * hyper_pmf(rep_size, k, n, y);
    worst = std::max(
        worst, std::fabs(static_cast<double>(mixed) - binom_pmf(n, p, y)));
  }
  return worst;
}

}  // namespace repstat
