#ifndef REPSTAT_ESTIMATION_HPP
#define REPSTAT_ESTIMATION_HPP

#include "repstat/interval.hpp"

namespace repstat {

/// Wald confidence interval for the process rate p:
/// p_hat +- z_{alpha/2} sqrt(p_hat (1 - p_hat) / n), clamped to [0, 1].
/// Zero-width (degenerate flag) when y is 0 or n.
Interval wald_ci(const SampleSummary& summary, double alpha);

/// Score-form confidence interval with denominator 2(n + z^2); always
/// contains p_hat and stays inside (0, 1) for interior y.
Interval wilson_ci(const SampleSummary& summary, double alpha);

/// Clopper-Pearson interval: endpoints solve the exact binomial tail
/// equations P(Y >= y) = alpha/2 and P(Y <= y) = alpha/2, by bisection on
/// binom_cdf. Equal-tail split.
Interval clopper_pearson_ci(const SampleSummary& summary, double alpha);

}  // namespace repstat

#endif  // REPSTAT_ESTIMATION_HPP
