#include "repstat/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "repstat/dist.hpp"

namespace repstat {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("alpha must lie in (0, 1)");
}

bool small_sample_advisory(const SampleSummary& s) noexcept {
  // n * p_hat == y exactly, so the usual rule reduces to integer counts.
  return s.successes < 5 || s.n - s.successes < 5;
}

// Solve binom_cdf(n, p, k) = target for p. The cdf is strictly decreasing
// in p when 0 <= k < n, so plain bisection converges unconditionally.
double solve_cdf_for_p(std::uint64_t n, std::uint64_t k, double target) {
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (binom_cdf(n, mid, k) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Interval wald_ci(const SampleSummary& summary, double alpha) {
  check_alpha(alpha);
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double ph = summary.p_hat();
  const double half =
      z * std::sqrt(ph * (1.0 - ph) / static_cast<double>(summary.n));
  Interval iv;
  iv.lower = std::max(0.0, ph - half);
  iv.upper = std::min(1.0, ph + half);
  iv.level = 1.0 - alpha;
  iv.kind = IntervalKind::confidence;
  iv.target = IntervalTarget::parameter_p;
  iv.degenerate = summary.successes == 0 || summary.successes == summary.n;
  iv.small_sample = small_sample_advisory(summary);
  return iv;
}

Interval wilson_ci(const SampleSummary& summary, double alpha) {
  check_alpha(alpha);
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double z2 = z * z;
  const double n = static_cast<double>(summary.n);
  const double ph = summary.p_hat();
  const double center = 2.0 * n * ph + z2;
  const double spread = z * std::sqrt(z2 + 4.0 * n * ph * (1.0 - ph));
  const double denom = 2.0 * (n + z2);
  Interval iv;
  iv.lower = std::max(0.0, (center - spread) / denom);
  iv.upper = std::min(1.0, (center + spread) / denom);
  iv.level = 1.0 - alpha;
  iv.kind = IntervalKind::confidence;
  iv.target = IntervalTarget::parameter_p;
  iv.small_sample = small_sample_advisory(summary);
  return iv;
}

Interval clopper_pearson_ci(const SampleSummary& summary, double alpha) {
  check_alpha(alpha);
  const std::uint64_t n = summary.n;
  const std::uint64_t y = summary.successes;
  const double half_alpha = alpha / 2.0;
  Interval iv;
  // Lower endpoint: P(Y >= y | p) = alpha/2, i.e. cdf at y-1 = 1 - alpha/2.
  iv.lower = (y == 0) ? 0.0 : solve_cdf_for_p(n, y - 1, 1.0 - half_alpha);
  // Upper endpoint: P(Y <= y | p) = alpha/2.
  iv.upper = (y == n) ? 1.0 : solve_cdf_for_p(n, y, half_alpha);
  iv.level = 1.0 - alpha;
  iv.kind = IntervalKind::confidence;
  iv.target = IntervalTarget::parameter_p;
  return iv;
}

}  // namespace repstat
