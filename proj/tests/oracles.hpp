// Test-side oracles, intentionally independent of the library's own
// computation paths: brute-force subset enumeration and a chi-square
// critical-value approximation for sampler goodness-of-fit checks.

#ifndef REPSTAT_TESTS_ORACLES_HPP
#define REPSTAT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "repstat/dist.hpp"

namespace repstat::test {

/// Exact mean and variance of the success count when drawing n items from
/// a pool of pool_size containing pool_successes successes, by enumerating
/// every size-n subset. Integer sums, no sampling, no closed forms.
inline std::pair<double, double> enumerate_subset_count_moments(
    std::uint64_t pool_size, std::uint64_t pool_successes, std::uint64_t n) {
  std::vector<int> mask(pool_size, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(n), 1);

  std::uint64_t subsets = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  // prev_permutation over a sorted-descending mask walks every subset once
  do {
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < pool_successes; ++i) count += mask[i];
    ++subsets;
    sum += count;
    sum_sq += count * count;
  } while (std::prev_permutation(mask.begin(), mask.end()));

  const double mean = static_cast<double>(sum) / static_cast<double>(subsets);
  const double variance =
      static_cast<double>(sum_sq) / static_cast<double>(subsets) - mean * mean;
  return {mean, variance};
}

/// Chi-square upper critical value by the Wilson-Hilferty cube
/// approximation; plenty accurate for goodness-of-fit gates at extreme
/// significance levels.
inline double chi_square_critical(double df, double significance) {
  const double z = repstat::norm_quantile(1.0 - significance);
  const double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
  return df * t * t * t;
}

/// Pearson chi-square statistic with tail pooling so each cell keeps an
/// expected count of at least min_expected. Returns {statistic, cells}.
inline std::pair<double, std::size_t> chi_square_statistic(
    const std::vector<std::uint64_t>& observed,
    const std::vector<double>& expected, double min_expected = 10.0) {
  double stat = 0.0;
  std::size_t cells = 0;
  double obs_acc = 0.0;
  double exp_acc = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    obs_acc += static_cast<double>(observed[i]);
    exp_acc += expected[i];
    if (exp_acc >= min_expected) {
      const double d = obs_acc - exp_acc;
      stat += d * d / exp_acc;
      ++cells;
      obs_acc = 0.0;
      exp_acc = 0.0;
    }
  }
  if (exp_acc > 0.0) {
    // fold the remainder into the last cell
    const double d = obs_acc - exp_acc;
    stat += d * d / exp_acc;
    ++cells;
  }
  return {stat, cells};
}

}  // namespace repstat::test

#endif  // REPSTAT_TESTS_ORACLES_HPP
