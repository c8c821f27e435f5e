#include "repstat/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "repstat/dist.hpp"
#include "repstat/estimation.hpp"

namespace repstat {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("alpha must lie in (0, 1)");
}

void check_rep_size(std::uint64_t n, std::uint64_t rep_size) {
  if (n > rep_size)
    throw std::domain_error("requires n <= N (researcher's sample within "
                            "the representative sample)");
}

// Both quadratic intervals are roots of (1+c) q^2 - (2 p_hat + c) q +
// p_hat^2 = 0; only c differs.
Interval quadratic_from_c(const SampleSummary& summary, double c,
                          double alpha) {
  const double ph = summary.p_hat();
  double disc = c * (c + 4.0 * ph * (1.0 - ph));
  if (disc < 0.0) disc = 0.0;  // float residue near the census
  const double spread = std::sqrt(disc);
  const double denom = 2.0 * (1.0 + c);
  Interval iv;
  iv.lower = std::max(0.0, (2.0 * ph + c - spread) / denom);
  iv.upper = std::min(1.0, (2.0 * ph + c + spread) / denom);
  iv.level = 1.0 - alpha;
  iv.kind = IntervalKind::prediction;
  iv.target = IntervalTarget::statistic_p_N;
  iv.small_sample = summary.successes < 5 || summary.n - summary.successes < 5;
  return iv;
}

}  // namespace

Interval wald_fpc_pi(const SampleSummary& summary, std::uint64_t rep_size,
                     double alpha) {
  check_alpha(alpha);
  check_rep_size(summary.n, rep_size);
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double ph = summary.p_hat();
  const double fpc = std::sqrt(static_cast<double>(rep_size - summary.n) /
                               static_cast<double>(rep_size));
  const double half =
      z * fpc * std::sqrt(ph * (1.0 - ph) / static_cast<double>(summary.n));
  Interval iv;
  iv.lower = std::max(0.0, ph - half);
  iv.upper = std::min(1.0, ph + half);
  iv.level = 1.0 - alpha;
  iv.kind = IntervalKind::prediction;
  iv.target = IntervalTarget::statistic_p_N;
  iv.degenerate = summary.successes == 0 || summary.successes == summary.n;
  iv.small_sample = summary.successes < 5 || summary.n - summary.successes < 5;
  return iv;
}

Interval conservative_pi(const SampleSummary& summary, double alpha) {
  Interval iv = wald_ci(summary, alpha);
  iv.kind = IntervalKind::prediction;
  iv.target = IntervalTarget::statistic_p_N;
  return iv;
}

Interval quadratic_pi(const SampleSummary& summary, std::uint64_t rep_size,
                      double alpha) {
  check_alpha(alpha);
  check_rep_size(summary.n, rep_size);
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double c = z * z *
                   (static_cast<double>(rep_size - summary.n) /
                    (static_cast<double>(summary.n) *
                     static_cast<double>(rep_size)));
  return quadratic_from_c(summary, c, alpha);
}

Interval quadratic_pi_nfree(const SampleSummary& summary, double alpha) {
  check_alpha(alpha);
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double c = z * z / static_cast<double>(summary.n);
  return quadratic_from_c(summary, c, alpha);
}

Interval mean_pi(const MeanSummary& summary, std::uint64_t rep_size,
                 double alpha) {
  check_alpha(alpha);
  check_rep_size(summary.n, rep_size);
  const double z = norm_quantile(1.0 - alpha / 2.0);
  const double fpc = std::sqrt(static_cast<double>(rep_size - summary.n) /
                               static_cast<double>(rep_size));
  const double half =
      z * fpc * summary.sd / std::sqrt(static_cast<double>(summary.n));
  Interval iv;
  iv.lower = summary.mean - half;
  iv.upper = summary.mean + half;
  iv.level = 1.0 - alpha;
  iv.kind = IntervalKind::prediction;
  iv.target = IntervalTarget::statistic_mean_N;
  iv.degenerate = summary.sd == 0.0;
  return iv;
}

double standardized_gap(double p_hat_n, double p_hat_N, std::uint64_t n,
                        std::uint64_t rep_size, GapScale scale,
                        double p_true) {
  if (n >= rep_size) throw std::domain_error("requires n < N");
  double v = 0.0;
  switch (scale) {
    case GapScale::true_p:
      if (!(p_true >= 0.0 && p_true <= 1.0))
        throw std::domain_error("true-p scale requires p in [0, 1]");
      v = p_true * (1.0 - p_true);
      break;
    case GapScale::plug_in_sample:
      v = p_hat_n * (1.0 - p_hat_n);
      break;
    case GapScale::plug_in_rep:
      v = p_hat_N * (1.0 - p_hat_N);
      break;
  }
  if (v <= 0.0)
    throw std::domain_error("degenerate variance proxy (v = 0)");
  const double fpc = std::sqrt(static_cast<double>(rep_size - n) /
                               static_cast<double>(rep_size));
  return (p_hat_n - p_hat_N) / (fpc * std::sqrt(v / static_cast<double>(n)));
}

Interval snap_outward(const Interval& interval, std::uint64_t rep_size) {
  if (rep_size == 0) throw std::domain_error("requires N >= 1");
  const double N = static_cast<double>(rep_size);
  Interval out = interval;
  out.lower = std::max(0.0, std::floor(interval.lower * N) / N);
  out.upper = std::min(1.0, std::ceil(interval.upper * N) / N);
  return out;
}

}  // namespace repstat
