#ifndef REPSTAT_PREDICTION_HPP
#define REPSTAT_PREDICTION_HPP

#include <cstdint>

#include "repstat/interval.hpp"

namespace repstat {

/// Wald-form prediction interval for the representative-sample proportion,
/// shrunk by the finite population correction sqrt(1 - n/N). Zero width at
/// a census (n = N).
Interval wald_fpc_pi(const SampleSummary& summary, std::uint64_t rep_size,
                     double alpha);

/// N-free prediction interval: drops the correction factor (which is < 1),
/// giving an at-least-level interval with the same endpoints as wald_ci.
Interval conservative_pi(const SampleSummary& summary, double alpha);

/// Prediction interval from inverting the quadratic
/// (1+c) q^2 - (2 p_hat + c) q + p_hat^2 <= 0 with c = z^2 (N-n)/(nN).
/// The discriminant is evaluated as c (c + 4 p_hat (1 - p_hat)), which is
/// cancellation-free near the census.
Interval quadratic_pi(const SampleSummary& summary, std::uint64_t rep_size,
                      double alpha);

/// Quadratic prediction interval with c = z^2 / n (the N -> infinity
/// replacement of (N-n)/(nN)); needs no N and coincides with wilson_ci.
Interval quadratic_pi_nfree(const SampleSummary& summary, double alpha);

/// Prediction interval for the representative-sample mean:
/// mean +- z sqrt((N-n)/N) sd/sqrt(n). Unclamped (measurement scale).
Interval mean_pi(const MeanSummary& summary, std::uint64_t rep_size,
                 double alpha);

/// Variance proxy used to standardize the gap between the researcher's and
/// representative sample proportions.
enum class GapScale { true_p, plug_in_sample, plug_in_rep };

/// (p_hat_n - p_hat_N) / (sqrt((N-n)/N) sqrt(v/n)) with v chosen per scale:
/// p(1-p), p_hat_n(1-p_hat_n), or p_hat_N(1-p_hat_N). Asymptotically
/// standard normal; diagnostic use only. Throws std::domain_error when the
/// chosen variance proxy is zero (callers filter and count such cases).
double standardized_gap(double p_hat_n, double p_hat_N, std::uint64_t n,
                        std::uint64_t rep_size, GapScale scale,
                        double p_true = 0.0);

/// Round a proportion interval outward to the 1/N lattice the target
/// statistic lives on: lower down, upper up. Never shrinks the interval.
Interval snap_outward(const Interval& interval, std::uint64_t rep_size);

}  // namespace repstat

#endif  // REPSTAT_PREDICTION_HPP
