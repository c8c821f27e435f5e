#include <cmath>

#include "doctest.h"
#include "repstat/dist.hpp"
#include "repstat/estimation.hpp"

using namespace repstat;

TEST_SUITE_BEGIN("estimation");

TEST_CASE("wald_ci at the penny-spin data") {
  const Interval iv = wald_ci(SampleSummary(200, 83), 0.05);
  // frozen: 0.415 -+ z sqrt(0.415*0.585/200) at 50-digit precision
  CHECK(iv.lower == doctest::Approx(0.3467134653).epsilon(1e-8));
  CHECK(iv.upper == doctest::Approx(0.4832865347).epsilon(1e-8));
  CHECK(iv.level == doctest::Approx(0.95).epsilon(1e-14));
  CHECK(iv.kind == IntervalKind::confidence);
  CHECK(iv.target == IntervalTarget::parameter_p);
  CHECK_FALSE(iv.degenerate);
  CHECK_FALSE(iv.small_sample);
  // symmetric about p_hat before clamping
  CHECK(std::fabs((iv.upper - 0.415) - (0.415 - iv.lower)) <= 1e-12);
}

TEST_CASE("wald_ci degenerate and collapse edges") {
  const Interval zero = wald_ci(SampleSummary(10, 0), 0.05);
  CHECK(zero.lower == 0.0);
  CHECK(zero.upper == 0.0);
  CHECK(zero.degenerate);
  CHECK(zero.small_sample);

  const Interval full = wald_ci(SampleSummary(10, 10), 0.05);
  CHECK(full.lower == 1.0);
  CHECK(full.upper == 1.0);
  CHECK(full.degenerate);

  // alpha -> 1 collapses toward the point estimate
  const Interval tight = wald_ci(SampleSummary(100, 50), 0.9999);
  CHECK(tight.width() < 1e-4);
  CHECK(tight.contains(0.5));

  CHECK_THROWS_AS(wald_ci(SampleSummary(10, 5), 0.0), std::domain_error);
  CHECK_THROWS_AS(wald_ci(SampleSummary(10, 5), 1.0), std::domain_error);
}

TEST_CASE("wald_ci width scales as 1/sqrt(n)") {
  for (const double alpha : {0.01, 0.05, 0.2}) {
    const double w1 = wald_ci(SampleSummary(100, 40), alpha).width();
    const double w4 = wald_ci(SampleSummary(400, 160), alpha).width();
    CHECK(std::fabs(w4 / w1 - 0.5) <= 1e-12);
  }
}

TEST_CASE("wilson_ci boundary algebra") {
  const double z = norm_quantile(0.975);
  const double z2 = z * z;

  const Interval at_zero = wilson_ci(SampleSummary(10, 0), 0.05);
  CHECK(at_zero.lower == doctest::Approx(0.0).epsilon(1e-14));
  // frozen: z^2/(n+z^2) = 0.2775327999
  CHECK(at_zero.upper == doctest::Approx(0.2775327999).epsilon(1e-8));
  CHECK(at_zero.upper == doctest::Approx(z2 / (10 + z2)).epsilon(1e-12));

  const Interval at_full = wilson_ci(SampleSummary(100, 100), 0.05);
  CHECK(at_full.upper == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(at_full.lower == doctest::Approx(100.0 / (100.0 + z2)).epsilon(1e-12));
}

TEST_CASE("wilson_ci contains p_hat, midpoint pulled toward 1/2") {
  const Interval iv = wilson_ci(SampleSummary(200, 83), 0.05);
  CHECK(iv.contains(0.415));
  const double mid = 0.5 * (iv.lower + iv.upper);
  CHECK(mid > 0.415);  // p_hat < 1/2, so shrinkage pulls upward

  for (std::uint64_t n : {3ULL, 10ULL, 47ULL, 200ULL}) {
    for (std::uint64_t y = 0; y <= n; y += (n > 10 ? n / 7 : 1)) {
      const Interval w = wilson_ci(SampleSummary(n, y), 0.05);
      const double ph = static_cast<double>(y) / static_cast<double>(n);
      CHECK(w.lower <= ph + 1e-15);
      CHECK(w.upper >= ph - 1e-15);
    }
  }
}

TEST_CASE("clopper_pearson_ci closed-form boundaries") {
  const Interval at_zero = clopper_pearson_ci(SampleSummary(10, 0), 0.05);
  CHECK(at_zero.lower == 0.0);
  // frozen: 1 - 0.025^(1/10)
  CHECK(at_zero.upper == doctest::Approx(0.3084971078).epsilon(1e-7));

  const Interval at_full = clopper_pearson_ci(SampleSummary(10, 10), 0.05);
  CHECK(at_full.upper == 1.0);
  CHECK(at_full.lower == doctest::Approx(0.6915028922).epsilon(1e-7));
}

TEST_CASE("clopper_pearson_ci at the penny-spin data") {
  const Interval cp = clopper_pearson_ci(SampleSummary(200, 83), 0.05);
  // frozen: exact tail inversion at 50-digit precision
  CHECK(cp.lower == doctest::Approx(0.3459336682).epsilon(1e-7));
  CHECK(cp.upper == doctest::Approx(0.4866246856).epsilon(1e-7));
  CHECK(cp.contains(0.415));
  CHECK(cp.width() > wald_ci(SampleSummary(200, 83), 0.05).width());
}

TEST_CASE("clopper_pearson endpoints invert the binomial tails") {
  for (const std::uint64_t n : {5ULL, 25ULL, 200ULL}) {
    for (std::uint64_t y = 0; y <= n; y += (n > 10 ? n / 5 : 1)) {
      const Interval cp = clopper_pearson_ci(SampleSummary(n, y), 0.05);
      const double ph = static_cast<double>(y) / static_cast<double>(n);
      CHECK(cp.contains(ph));
      if (y > 0) {
        const double upper_tail = 1.0 - binom_cdf(n, cp.lower, y - 1);
        CHECK(std::fabs(upper_tail - 0.025) <= 1e-8);
      }
      if (y < n) {
        const double lower_tail = binom_cdf(n, cp.upper, y);
        CHECK(std::fabs(lower_tail - 0.025) <= 1e-8);
      }
    }
  }
}

TEST_CASE("level monotonicity: smaller alpha gives wider intervals") {
  const SampleSummary data(50, 21);
  const double a1 = 0.01;
  const double a2 = 0.10;
  for (const auto method : {&wald_ci, &wilson_ci, &clopper_pearson_ci}) {
    const Interval wide = method(data, a1);
    const Interval narrow = method(data, a2);
    CHECK(wide.lower <= narrow.lower + 1e-12);
    CHECK(wide.upper >= narrow.upper - 1e-12);
  }
}

TEST_SUITE_END();
