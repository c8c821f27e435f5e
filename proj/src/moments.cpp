#include "repstat/moments.hpp"

#include <stdexcept>

namespace repstat {

namespace {

void check_conditional_args(std::uint64_t rep_size, std::uint64_t rep_successes,
                            std::uint64_t n) {
  if (rep_size < 2)
    throw std::domain_error("conditional moments require rep_size >= 2");
  if (rep_successes > rep_size)
    throw std::domain_error("rep_successes must not exceed rep_size");
  if (n < 1 || n > rep_size)
    throw std::domain_error("requires 1 <= n <= rep_size");
}

}  // namespace

MomentPair conditional_count_moments(std::uint64_t rep_size,
                                     std::uint64_t rep_successes,
                                     std::uint64_t n) {
  check_conditional_args(rep_size, rep_successes, n);
  const double N = static_cast<double>(rep_size);
  const double nd = static_cast<double>(n);
  const double p_rep = static_cast<double>(rep_successes) / N;
  const double fpc = 1.0 - (nd - 1.0) / (N - 1.0);
  return {nd * p_rep, fpc * nd * p_rep * (1.0 - p_rep)};
}

MomentPair conditional_proportion_moments(std::uint64_t rep_size,
                                          std::uint64_t rep_successes,
                                          std::uint64_t n) {
  check_conditional_args(rep_size, rep_successes, n);
  const double N = static_cast<double>(rep_size);
  const double nd = static_cast<double>(n);
  const double p_rep = static_cast<double>(rep_successes) / N;
  const double fpc = 1.0 - (nd - 1.0) / (N - 1.0);
  return {p_rep, fpc * p_rep * (1.0 - p_rep) / nd};
}

MomentPair sample_proportion_moments(std::uint64_t n, double p) {
  if (n < 1) throw std::domain_error("requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("p must lie in [0, 1]");
  return {p, p * (1.0 - p) / static_cast<double>(n)};
}

double var_estimate_biased(const SampleSummary& summary) noexcept {
  const double ph = summary.p_hat();
  return ph * (1.0 - ph) / static_cast<double>(summary.n);
}

double var_estimate_unbiased(const SampleSummary& summary) {
  if (summary.n < 2)
    throw std::domain_error("unbiased variance estimate requires n >= 2");
  return summary.p_hat() * (1.0 - summary.p_hat()) /
         static_cast<double>(summary.n - 1);
}

}  // namespace repstat
