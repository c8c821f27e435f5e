#ifndef REPSTAT_DIST_HPP
#define REPSTAT_DIST_HPP

#include <cstdint>
#include <vector>

#include "repstat/rng.hpp"

namespace repstat {

/// log(k!). Table-backed up to kLogFactorialTableSize entries (built once,
/// thread-safe); lgamma beyond that. The table keeps combinatorial mass
/// functions exact enough for 1e-12-level normalization checks.
inline constexpr std::uint64_t kLogFactorialTableSize = 1'000'001;
double log_factorial(std::uint64_t k) noexcept;

/// log C(n, k), requires k <= n.
double log_choose(std::uint64_t n, std::uint64_t k) noexcept;

/// P(Y = k) for Y ~ Binomial(n, p). Throws std::domain_error if k > n or p
/// is outside [0, 1].
double binom_pmf(std::uint64_t n, double p, std::uint64_t k);

/// P(Y <= k) for Y ~ Binomial(n, p).
double binom_cdf(std::uint64_t n, double p, std::uint64_t k);

/// P(Y = y) for Y hypergeometric: y successes in a draw of n from a pool of
/// N containing K successes. Zero off support; throws std::domain_error if
/// K > N or n > N.
double hyper_pmf(std::uint64_t N, std::uint64_t K, std::uint64_t n,
                 std::uint64_t y);

/// Standard normal CDF, absolute error below 1e-14.
double norm_cdf(double x) noexcept;

/// Standard normal quantile. Acklam's rational approximation refined by one
/// Newton step on norm_cdf. Throws std::domain_error unless 0 < q < 1.
double norm_quantile(double q);

/// Binomial draw: inversion when n*min(p,1-p) <= 30, otherwise Hormann's
/// BTRS transformed rejection.
std::uint64_t sample_binomial(Rng& rng, std::uint64_t n, double p);

/// Hypergeometric draw: sequential urn draws for N <= 1e4, pmf inversion
/// from the mode beyond. Same count-ordering requirements as hyper_pmf.
std::uint64_t sample_hypergeometric(Rng& rng, std::uint64_t N,
                                    std::uint64_t K, std::uint64_t n);

/// Uniform size-n subset of {0, ..., N-1} by partial Fisher-Yates; every
/// index has inclusion probability n/N. Throws std::domain_error if n > N.
std::vector<std::uint64_t> sample_srs(Rng& rng, std::uint64_t N,
                                      std::uint64_t n);

}  // namespace repstat

#endif  // REPSTAT_DIST_HPP
