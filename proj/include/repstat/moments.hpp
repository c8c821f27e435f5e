#ifndef REPSTAT_MOMENTS_HPP
#define REPSTAT_MOMENTS_HPP

#include <cstdint>

#include "repstat/interval.hpp"

namespace repstat {

struct MomentPair {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance of the researcher's-sample success count, conditional
/// on the representative sample containing rep_successes successes out of
/// rep_size. Requires rep_size >= 2 (the N-1 divisor degenerates below).
MomentPair conditional_count_moments(std::uint64_t rep_size,
                                     std::uint64_t rep_successes,
                                     std::uint64_t n);

/// Same, for the researcher's-sample proportion.
MomentPair conditional_proportion_moments(std::uint64_t rep_size,
                                          std::uint64_t rep_successes,
                                          std::uint64_t n);

/// Unconditional mean and variance of the sample proportion when the
/// process rate is p: (p, p(1-p)/n).
MomentPair sample_proportion_moments(std::uint64_t n, double p);

/// p_hat (1 - p_hat) / n. Biased low for the sample-proportion variance:
/// its exact expectation is ((n-1)/n) p(1-p)/n.
double var_estimate_biased(const SampleSummary& summary) noexcept;

/// p_hat (1 - p_hat) / (n - 1), the unbiased estimator of p(1-p)/n.
/// Requires n >= 2.
double var_estimate_unbiased(const SampleSummary& summary);

}  // namespace repstat

#endif  // REPSTAT_MOMENTS_HPP
