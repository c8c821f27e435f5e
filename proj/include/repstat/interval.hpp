#ifndef REPSTAT_INTERVAL_HPP
#define REPSTAT_INTERVAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace repstat {

enum class IntervalKind { confidence, prediction };

/// What the interval is for: the process rate p, the representative-sample
/// proportion, or the representative-sample mean.
enum class IntervalTarget { parameter_p, statistic_p_N, statistic_mean_N };

enum class Method {
  wald,
  wilson,
  clopper_pearson,
  wald_fpc,
  conservative,
  quadratic,
  quadratic_nfree,
  mean,
};

std::string_view to_string(IntervalKind kind) noexcept;
std::string_view to_string(IntervalTarget target) noexcept;
std::string_view to_string(Method method) noexcept;
std::optional<Method> method_from_string(std::string_view name) noexcept;

/// True for the prediction-interval methods (target is a representative-
/// sample statistic rather than the process parameter).
bool is_prediction_method(Method method) noexcept;

/// True for methods whose interval construction needs the representative
/// sample size N.
bool method_requires_rep_size(Method method) noexcept;

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.0;  // 1 - alpha
  IntervalKind kind = IntervalKind::confidence;
  IntervalTarget target = IntervalTarget::parameter_p;
  bool degenerate = false;    // variance estimate vanished (p_hat in {0, 1})
  bool small_sample = false;  // advisory: n*p_hat < 5 or n*(1 - p_hat) < 5

  double width() const noexcept { return upper - lower; }
  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

/// Sufficient statistics of a binary researcher's sample.
struct SampleSummary {
  std::uint64_t n;
  std::uint64_t successes;

  SampleSummary(std::uint64_t n_, std::uint64_t successes_)
      : n(n_), successes(successes_) {
    if (n == 0) throw std::domain_error("sample size n must be >= 1");
    if (successes > n)
      throw std::domain_error("success count y must satisfy y <= n");
  }

  double p_hat() const noexcept {
    return static_cast<double>(successes) / static_cast<double>(n);
  }
};

/// Sufficient statistics of a continuous researcher's sample; sd uses the
/// n-1 divisor.
struct MeanSummary {
  std::uint64_t n;
  double mean;
  double sd;

  MeanSummary(std::uint64_t n_, double mean_, double sd_)
      : n(n_), mean(mean_), sd(sd_) {
    if (n < 2) throw std::domain_error("mean summary requires n >= 2");
    if (!(sd >= 0.0)) throw std::domain_error("sd must be >= 0");
  }
};

}  // namespace repstat

#endif  // REPSTAT_INTERVAL_HPP
