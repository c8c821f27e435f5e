#include "repstat/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace repstat {

namespace {

std::vector<double> build_log_factorial_table() {
  // Kahan-compensated cumulative sum in long double keeps every entry well
  // under one double ulp of the true value.
  std::vector<double> table(kLogFactorialTableSize);
  long double sum = 0.0L;
  long double comp = 0.0L;
  table[0] = 0.0;
  for (std::uint64_t k = 1; k < kLogFactorialTableSize; ++k) {
    const long double term = std::log(static_cast<long double>(k)) - comp;
    const long double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
    table[k] = static_cast<double>(sum);
  }
  return table;
}

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = build_log_factorial_table();
  return table;
}

[[noreturn]] void throw_domain(const std::string& msg) {
  throw std::domain_error(msg);
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw_domain(std::string(name) + " must lie in [0, 1]");
}

// Binomial draw by inversion (chop-down from k = 0), for p <= 0.5 and small
// mean. Exact: walks the pmf recurrence until the uniform is exhausted.
std::uint64_t binomial_inversion(Rng& rng, std::uint64_t n, double p) {
  const double q = 1.0 - p;
  const double s = p / q;
  double f = std::exp(static_cast<double>(n) * std::log1p(-p));
  double u = rng.next_double();
  std::uint64_t k = 0;
  while (u > f && k < n) {
    u -= f;
    ++k;
    f *= s * static_cast<double>(n - k + 1) / static_cast<double>(k);
  }
  return k;
}

// Hormann (1993), algorithm BTRS: transformed rejection with the exact
// log-pmf ratio as acceptance test. Requires p <= 0.5 and n*p >= 10.
std::uint64_t binomial_btrs(Rng& rng, std::uint64_t n, double p) {
  const double nd = static_cast<double>(n);
  const double q = 1.0 - p;
  const double spq = std::sqrt(nd * p * q);
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = nd * p + 0.5;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double vr = 0.92 - 4.2 / b;
  const double urvr = 0.86 * vr;
  const double lpq = std::log(p / q);
  const double m = std::floor((nd + 1.0) * p);
  const double h = log_factorial(static_cast<std::uint64_t>(m)) +
                   log_factorial(n - static_cast<std::uint64_t>(m));

  for (;;) {
    double v = rng.next_double();
    double u;
    if (v <= urvr) {
      u = v / vr - 0.43;
      const double k =
          std::floor((2.0 * a / (0.5 - std::fabs(u)) + b) * u + c);
      if (k < 0.0 || k > nd) continue;
      return static_cast<std::uint64_t>(k);
    }
    if (v >= vr) {
      u = rng.next_double() - 0.5;
    } else {
      u = v / vr - 0.93;
      u = (u < 0.0 ? -0.5 : 0.5) - u;
      v = rng.next_double() * vr;
    }
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + c);
    if (k < 0.0 || k > nd) continue;
    v = v * alpha / (a / (us * us) + b);
    const std::uint64_t ki = static_cast<std::uint64_t>(k);
    if (std::log(v) <=
        h - log_factorial(ki) - log_factorial(n - ki) + (k - m) * lpq)
      return ki;
  }
}

// Hypergeometric draw by conditional urn steps; exact, O(n) integer
// arithmetic.
std::uint64_t hypergeometric_urn(Rng& rng, std::uint64_t N, std::uint64_t K,
                                 std::uint64_t n) {
  std::uint64_t successes_left = K;
  std::uint64_t y = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (rng.next_below(N - i) < successes_left) {
      ++y;
      --successes_left;
    }
  }
  return y;
}

// Hypergeometric draw by pmf inversion, walking outward from the mode;
// expected O(sd) steps.
std::uint64_t hypergeometric_inversion(Rng& rng, std::uint64_t N,
                                       std::uint64_t K, std::uint64_t n) {
  const std::uint64_t lo =
      (n + K > N) ? n + K - N : 0;  // support lower bound
  const std::uint64_t hi = std::min(n, K);
  const std::uint64_t mode = std::min(
      hi, std::max(lo, static_cast<std::uint64_t>(
                           (static_cast<double>(n) + 1.0) *
                           (static_cast<double>(K) + 1.0) /
                           (static_cast<double>(N) + 2.0))));

  auto pmf_up = [&](std::uint64_t y, double f) {
    // f(y+1) / f(y)
    return f * (static_cast<double>(K - y) * static_cast<double>(n - y)) /
           (static_cast<double>(y + 1) *
            static_cast<double>(N - K - n + y + 1));
  };
  auto pmf_down = [&](std::uint64_t y, double f) {
    // f(y-1) / f(y)
    return f * (static_cast<double>(y) * static_cast<double>(N - K - n + y)) /
           (static_cast<double>(K - y + 1) * static_cast<double>(n - y + 1));
  };

  const double f_mode = hyper_pmf(N, K, n, mode);
  double u = rng.next_double() - f_mode;
  if (u < 0.0) return mode;

  double f_up = f_mode;
  double f_dn = f_mode;
  std::uint64_t up = mode;
  std::uint64_t dn = mode;
  while (up < hi || dn > lo) {
    if (up < hi) {
      f_up = pmf_up(up, f_up);
      ++up;
      u -= f_up;
      if (u < 0.0) return up;
    }
    if (dn > lo) {
      f_dn = pmf_down(dn, f_dn);
      --dn;
      u -= f_dn;
      if (u < 0.0) return dn;
    }
  }
  // Residual float mass; the mode is the safest return.
  return mode;
}

}  // namespace

double log_factorial(std::uint64_t k) noexcept {
  const auto& table = log_factorial_table();
  if (k < table.size()) return table[k];
  return static_cast<double>(std::lgamma(static_cast<long double>(k) + 1.0L));
}

double log_choose(std::uint64_t n, std::uint64_t k) noexcept {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double binom_pmf(std::uint64_t n, double p, std::uint64_t k) {
  check_probability(p, "p");
  if (k > n) throw_domain("binom_pmf requires k <= n");
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  const double log_p = log_choose(n, k) + static_cast<double>(k) * std::log(p) +
                       static_cast<double>(n - k) * std::log1p(-p);
  const double v = std::exp(log_p);
  return std::min(v, 1.0);
}

double binom_cdf(std::uint64_t n, double p, std::uint64_t k) {
  check_probability(p, "p");
  if (k > n) throw_domain("binom_cdf requires k <= n");
  long double acc = 0.0L;
  for (std::uint64_t j = 0; j <= k; ++j) acc += binom_pmf(n, p, j);
  return std::min(static_cast<double>(acc), 1.0);
}

double hyper_pmf(std::uint64_t N, std::uint64_t K, std::uint64_t n,
                 std::uint64_t y) {
  if (K > N) throw_domain("hyper_pmf requires K <= N");
  if (n > N) throw_domain("hyper_pmf requires n <= N");
  const std::uint64_t lo = (n + K > N) ? n + K - N : 0;
  const std::uint64_t hi = std::min(n, K);
  if (y < lo || y > hi) return 0.0;
  const double log_p =
      log_choose(K, y) + log_choose(N - K, n - y) - log_choose(N, n);
  return std::min(std::exp(log_p), 1.0);
}

double norm_cdf(double x) noexcept {
  // 0.5 * erfc(-x / sqrt(2)); erfc keeps the lower tail accurate.
  return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

double norm_quantile(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw_domain("norm_quantile requires 0 < q < 1");

  // Acklam's rational approximation, |relative error| < 1.15e-9.
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double z;
  if (q < p_low) {
    const double r = std::sqrt(-2.0 * std::log(q));
    z = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
        ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  } else if (q <= 1.0 - p_low) {
    const double r = q - 0.5;
    const double s = r * r;
    z = (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) *
        r /
        (((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1.0);
  } else {
    const double r = std::sqrt(-2.0 * std::log1p(-q));
    z = -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
        ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  }

  // One Newton step on the exact CDF.
  const double phi =
      std::exp(-0.5 * z * z) * 0.3989422804014326779;  // 1/sqrt(2 pi)
  if (phi > 0.0) z -= (norm_cdf(z) - q) / phi;
  return z;
}

std::uint64_t sample_binomial(Rng& rng, std::uint64_t n, double p) {
  check_probability(p, "p");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  const bool flip = p > 0.5;
  const double pp = flip ? 1.0 - p : p;
  const double mean_min = static_cast<double>(n) * pp;
  const std::uint64_t k = (mean_min <= 30.0) ? binomial_inversion(rng, n, pp)
                                             : binomial_btrs(rng, n, pp);
  return flip ? n - k : k;
}

std::uint64_t sample_hypergeometric(Rng& rng, std::uint64_t N,
                                    std::uint64_t K, std::uint64_t n) {
  if (K > N) throw_domain("sample_hypergeometric requires K <= N");
  if (n > N) throw_domain("sample_hypergeometric requires n <= N");
  if (K == 0 || n == 0) return 0;
  if (K == N) return n;
  if (n == N) return K;
  if (N <= 10'000) return hypergeometric_urn(rng, N, K, n);
  return hypergeometric_inversion(rng, N, K, n);
}

std::vector<std::uint64_t> sample_srs(Rng& rng, std::uint64_t N,
                                      std::uint64_t n) {
  if (n > N) throw_domain("sample_srs requires n <= N");
  std::vector<std::uint64_t> idx(N);
  std::iota(idx.begin(), idx.end(), std::uint64_t{0});
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t j = i + rng.next_below(N - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(n);
  return idx;
}

}  // namespace repstat
