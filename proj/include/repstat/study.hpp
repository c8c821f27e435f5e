#ifndef REPSTAT_STUDY_HPP
#define REPSTAT_STUDY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "repstat/interval.hpp"
#include "repstat/prediction.hpp"

namespace repstat {

/// The generating process: a Bernoulli rate or a Normal law. Each study
/// replicate materializes a representative sample of size N from the
/// process and draws a researcher's sample of size n from it without
/// replacement.
struct BernoulliProcess {
  double p = 0.5;
};

struct NormalProcess {
  double mu = 0.0;
  double sigma = 1.0;
};

using ProcessSpec = std::variant<BernoulliProcess, NormalProcess>;

struct StudyConfig {
  ProcessSpec process;
  std::uint64_t rep_size = 0;     // N, size of the representative sample
  std::uint64_t sample_size = 0;  // n, size of the researcher's sample
  double alpha = 0.05;
  std::uint64_t replicates = 10'000;
  std::uint64_t seed = 0;
  std::vector<Method> methods;
  bool snap_to_grid = false;
};

struct CoverageRow {
  Method method = Method::wald;
  IntervalTarget target = IntervalTarget::parameter_p;
  IntervalKind kind = IntervalKind::confidence;
  double nominal_level = 0.0;
  double coverage = 0.0;
  double coverage_se = 0.0;  // 0 for exact computations
  double mean_width = 0.0;
  std::uint64_t replicates_used = 0;  // 0 for exact computations
  std::uint64_t degenerate_count = 0;
};

struct CoverageReport {
  std::uint64_t seed = 0;
  std::vector<CoverageRow> rows;
};

struct LimitDiagnostic {
  double ks_stat = 0.0;   // Kolmogorov-Smirnov distance to standard normal
  double mean = 0.0;      // sample mean of the standardized statistics
  double variance = 0.0;  // sample variance (m-1 divisor)
  std::uint64_t used = 0;
  std::uint64_t excluded = 0;  // replicates with a degenerate variance proxy
};

/// Thrown when an exact computation exceeds its cost bound (CLI exit 3).
class ResourceLimitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Interval for a binary sample under the given method. wald-fpc and
/// quadratic need rep_size; the other methods ignore it. Method::mean is
/// not a binary method and is rejected.
Interval compute_binary_interval(Method method, const SampleSummary& summary,
                                 std::optional<std::uint64_t> rep_size,
                                 double alpha);

/// Monte Carlo coverage study. Replicate r owns RNG stream r, so the
/// report is bit-identical for any thread count. CI methods are judged
/// against the process rate p; PI methods against the replicate's realized
/// representative-sample statistic.
CoverageReport simulate_study(const StudyConfig& config, unsigned threads = 1);

/// Exact coverage of a confidence-interval method: sum of binom_pmf(n,p,y)
/// over the outcomes y whose interval contains p. Requires n <= 1e4.
double exact_ci_coverage(Method method, std::uint64_t n, double p,
                         double alpha);

/// Exact coverage of a binary prediction-interval method under the joint
/// Binomial(N,p) x Hypergeometric law. Requires N <= 500.
double exact_pi_coverage(Method method, std::uint64_t rep_size,
                         std::uint64_t n, double p, double alpha,
                         bool snap_to_grid = false);

/// Full report row for an exact coverage computation (coverage plus exact
/// mean interval width under the Binomial(n,p) outcome law).
CoverageRow exact_coverage_row(Method method,
                               std::optional<std::uint64_t> rep_size,
                               std::uint64_t n, double p, double alpha,
                               bool snap_to_grid = false);

/// Simulates standardized_gap under the chosen scale and reports the KS
/// distance to the standard normal plus sample moments. Degenerate
/// replicates are excluded and counted.
LimitDiagnostic limit_diagnostic(const StudyConfig& config, GapScale scale,
                                 unsigned threads = 1);

/// max_y | sum_k binom_pmf(N,p,k) hyper_pmf(N,k,n,y) - binom_pmf(n,p,y) |.
/// The double sum collapses to the Binomial(n,p) marginal. Requires
/// N <= 40.
double marginal_check(std::uint64_t rep_size, std::uint64_t n, double p);

}  // namespace repstat

#endif  // REPSTAT_STUDY_HPP
