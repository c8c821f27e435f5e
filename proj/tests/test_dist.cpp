#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "repstat/dist.hpp"
#include "repstat/rng.hpp"

using namespace repstat;

TEST_SUITE_BEGIN("dist");

TEST_CASE("binom_pmf basics") {
  CHECK(binom_pmf(2, 0.5, 1) == doctest::Approx(0.5).epsilon(1e-14));
  // frozen: high-precision evaluation of C(10,3) 0.3^3 0.7^7
  CHECK(binom_pmf(10, 0.3, 3) ==
        doctest::Approx(0.266827932).epsilon(1e-12));
  CHECK(binom_pmf(10, 0.0, 0) == 1.0);
  CHECK(binom_pmf(10, 0.0, 3) == 0.0);
  CHECK(binom_pmf(10, 1.0, 10) == 1.0);
  const double spin = binom_pmf(200, 0.415, 83);
  CHECK(spin > 0.0);
  CHECK(spin < 1.0);
  CHECK_THROWS_AS(binom_pmf(10, 0.3, 11), std::domain_error);
  CHECK_THROWS_AS(binom_pmf(10, -0.1, 3), std::domain_error);
  CHECK_THROWS_AS(binom_pmf(10, 1.1, 3), std::domain_error);
}

TEST_CASE("binom_pmf normalizes to 1") {
  for (const std::uint64_t n : {1ULL, 2ULL, 7ULL, 50ULL, 200ULL}) {
    for (const double p : {0.0, 1e-9, 0.05, 0.3, 0.415, 0.5, 0.77, 1.0}) {
      long double sum = 0.0L;
      for (std::uint64_t k = 0; k <= n; ++k) sum += binom_pmf(n, p, k);
      CHECK(std::fabs(static_cast<double>(sum) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("binom_cdf") {
  CHECK(binom_cdf(5, 0.5, 5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(binom_cdf(5, 0.0, 0) == 1.0);
  // frozen: sum of high-precision pmf terms
  CHECK(binom_cdf(10, 0.3, 3) ==
        doctest::Approx(0.6496107184).epsilon(1e-12));
  double prev = -1.0;
  for (std::uint64_t k = 0; k <= 20; ++k) {
    const double c = binom_cdf(20, 0.37, k);
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("hyper_pmf exact values and support") {
  CHECK(hyper_pmf(10, 10, 4, 4) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hyper_pmf(10, 4, 5, 2) ==
        doctest::Approx(10.0 / 21.0).epsilon(1e-13));
  CHECK(hyper_pmf(6, 3, 2, 0) == doctest::Approx(0.2).epsilon(1e-13));
  // off support
  CHECK(hyper_pmf(10, 4, 5, 5) == 0.0);
  CHECK(hyper_pmf(10, 8, 5, 2) == 0.0);  // y below max(0, n-(N-K)) = 3
  CHECK_THROWS_AS(hyper_pmf(10, 11, 5, 2), std::domain_error);
  CHECK_THROWS_AS(hyper_pmf(10, 4, 11, 2), std::domain_error);
}

TEST_CASE("hyper_pmf matches exhaustive subset enumeration") {
  // all C(6,2) = 15 subsets of a 3-success pool
  std::uint64_t hits[3] = {0, 0, 0};
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      const int count = (a < 3 ? 1 : 0) + (b < 3 ? 1 : 0);
      ++hits[count];
    }
  for (std::uint64_t y = 0; y <= 2; ++y)
    CHECK(hyper_pmf(6, 3, 2, y) ==
          doctest::Approx(hits[y] / 15.0).epsilon(1e-14));
}

TEST_CASE("hyper_pmf normalization and moments across small grids") {
  for (std::uint64_t N = 2; N <= 60; N += 2) {
    for (std::uint64_t K = 0; K <= N; K += 3) {
      for (std::uint64_t n = 1; n <= N; n += 5) {
        const double Nd = static_cast<double>(N);
        const double expect_mean =
            static_cast<double>(n) * static_cast<double>(K) / Nd;
        long double sum = 0.0L;
        long double mean = 0.0L;
        long double central = 0.0L;
        for (std::uint64_t y = 0; y <= n; ++y) {
          const double f = hyper_pmf(N, K, n, y);
          const double d = static_cast<double>(y) - expect_mean;
          sum += f;
          mean += static_cast<long double>(y) * f;
          central += static_cast<long double>(d) * d * f;
        }
        CHECK(std::fabs(static_cast<double>(sum) - 1.0) <= 1e-12);
        CHECK(std::fabs(static_cast<double>(mean) - expect_mean) <= 1e-10);
        if (N >= 2) {
          const double q = static_cast<double>(K) / Nd;
          const double expect_var = static_cast<double>(n) * q * (1.0 - q) *
                                    (Nd - static_cast<double>(n)) /
                                    (Nd - 1.0);
          CHECK(std::fabs(static_cast<double>(central) - expect_var) <=
                1e-10);
        }
      }
    }
  }
}

TEST_CASE("binomial marginal of binomial-times-hypergeometric") {
  for (const std::uint64_t N : {5ULL, 9ULL, 12ULL}) {
    for (std::uint64_t n = 1; n <= N; ++n) {
      for (const double p : {0.25, 0.5, 0.8}) {
        for (std::uint64_t y = 0; y <= n; ++y) {
          long double mixed = 0.0L;
          for (std::uint64_t k = 0; k <= N; ++k)
            mixed += binom_pmf(N, p, k) * hyper_pmf(N, k, n, y);
          CHECK(std::fabs(static_cast<double>(mixed) - binom_pmf(n, p, y)) <=
                1e-12);
        }
      }
    }
  }
}

TEST_CASE("norm_cdf") {
  CHECK(norm_cdf(0.0) == 0.5);
  for (const double x : {0.1, 0.5, 1.0, 1.96, 2.5, 4.0, 7.5}) {
    CHECK(std::fabs(norm_cdf(-x) - (1.0 - norm_cdf(x))) <= 1e-12);
  }
  CHECK(norm_cdf(-8.0) < 1e-14);
  CHECK(norm_cdf(1.959963985) == doctest::Approx(0.975).epsilon(1e-9));
}

TEST_CASE("norm_quantile") {
  CHECK(norm_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
  // frozen: bisection on the normal CDF at 50-digit precision
  CHECK(norm_quantile(0.975) ==
        doctest::Approx(1.9599639845400542).epsilon(1e-10));
  CHECK(norm_quantile(0.9) ==
        doctest::Approx(1.2815515655446004).epsilon(1e-10));
  CHECK_THROWS_AS(norm_quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(norm_quantile(1.0), std::domain_error);
}

TEST_CASE("quantile/cdf round trip on a grid") {
  for (int i = 1; i <= 999; ++i) {
    const double q = static_cast<double>(i) / 1000.0;
    CHECK(std::fabs(norm_cdf(norm_quantile(q)) - q) <= 1e-9);
  }
}

TEST_CASE("rng determinism and stream separation") {
  Rng a(42, 7);
  Rng b(42, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  Rng c(42, 8);
  Rng d(43, 7);
  Rng base(42, 7);
  int diff_stream = 0;
  int diff_seed = 0;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t x = base.next_u64();
    diff_stream += c.next_u64() != x;
    diff_seed += d.next_u64() != x;
  }
  CHECK(diff_stream > 60);
  CHECK(diff_seed > 60);

  // first draws across many streams look uniform
  double sum = 0.0;
  for (std::uint64_t s = 0; s < 10'000; ++s) sum += Rng(5, s).next_double();
  CHECK(std::fabs(sum / 10'000.0 - 0.5) < 4.0 * 0.2887 / 100.0);
}

TEST_CASE("sample_binomial degenerate and moments") {
  Rng rng(1, 0);
  CHECK(sample_binomial(rng, 10, 0.0) == 0);
  CHECK(sample_binomial(rng, 10, 1.0) == 10);

  // Monte Carlo moment check, inversion path (n min(p,q) = 24 <= 30)
  const std::uint64_t R = 100'000;
  double sum = 0.0;
  for (std::uint64_t r = 0; r < R; ++r) {
    Rng stream(123, r);
    sum += static_cast<double>(sample_binomial(stream, 100, 0.4));
  }
  const double mean = sum / static_cast<double>(R);
  const double tol = 4.0 * std::sqrt(100 * 0.4 * 0.6 / static_cast<double>(R));
  CHECK(std::fabs(mean - 40.0) <= tol);
}

static void check_binomial_gof(std::uint64_t n, double p, std::uint64_t seed) {
  const std::uint64_t R = 100'000;
  std::vector<std::uint64_t> observed(n + 1, 0);
  for (std::uint64_t r = 0; r < R; ++r) {
    Rng rng(seed, r);
    ++observed[sample_binomial(rng, n, p)];
  }
  std::vector<double> expected(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k)
    expected[k] = static_cast<double>(R) * binom_pmf(n, p, k);
  const auto [stat, cells] = test::chi_square_statistic(observed, expected);
  REQUIRE(cells >= 2);
  CHECK(stat <
        test::chi_square_critical(static_cast<double>(cells - 1), 1e-4));
}

TEST_CASE("sample_binomial matches pmf (chi-square, both paths)") {
  check_binomial_gof(10, 0.3, 2024);    // inversion
  check_binomial_gof(1000, 0.37, 99);   // rejection
}

TEST_CASE("sample_hypergeometric degenerate cases") {
  Rng rng(3, 0);
  CHECK(sample_hypergeometric(rng, 10, 0, 5) == 0);
  CHECK(sample_hypergeometric(rng, 10, 10, 5) == 5);
  CHECK(sample_hypergeometric(rng, 10, 4, 10) == 4);
  CHECK_THROWS_AS(sample_hypergeometric(rng, 10, 11, 5), std::domain_error);
  CHECK_THROWS_AS(sample_hypergeometric(rng, 10, 4, 11), std::domain_error);
}

TEST_CASE("sample_hypergeometric empirical pmf near exact pmf") {
  const std::uint64_t R = 100'000;
  std::vector<std::uint64_t> observed(11, 0);
  for (std::uint64_t r = 0; r < R; ++r) {
    Rng rng(77, r);
    ++observed[sample_hypergeometric(rng, 20, 8, 10)];
  }
  for (std::uint64_t y = 0; y <= 10; ++y) {
    const double freq =
        static_cast<double>(observed[y]) / static_cast<double>(R);
    CHECK(std::fabs(freq - hyper_pmf(20, 8, 10, y)) <= 0.01);
  }
}

static void check_hypergeometric_gof(std::uint64_t N, std::uint64_t K,
                                     std::uint64_t n, std::uint64_t seed) {
  const std::uint64_t R = 100'000;
  std::vector<std::uint64_t> observed(n + 1, 0);
  for (std::uint64_t r = 0; r < R; ++r) {
    Rng rng(seed, r);
    ++observed[sample_hypergeometric(rng, N, K, n)];
  }
  std::vector<double> expected(n + 1);
  for (std::uint64_t y = 0; y <= n; ++y)
    expected[y] = static_cast<double>(R) * hyper_pmf(N, K, n, y);
  const auto [stat, cells] = test::chi_square_statistic(observed, expected);
  REQUIRE(cells >= 2);
  CHECK(stat <
        test::chi_square_critical(static_cast<double>(cells - 1), 1e-4));
}

TEST_CASE("sample_hypergeometric matches pmf (chi-square, both paths)") {
  check_hypergeometric_gof(20, 8, 10, 31);        // urn draws
  check_hypergeometric_gof(20'001, 8'000, 100, 32);  // pmf inversion
}

TEST_CASE("sample_srs census, empty, validity") {
  Rng rng(9, 0);
  const auto census = sample_srs(rng, 5, 5);
  CHECK(std::set<std::uint64_t>(census.begin(), census.end()) ==
        std::set<std::uint64_t>{0, 1, 2, 3, 4});
  CHECK(sample_srs(rng, 5, 0).empty());
  CHECK_THROWS_AS(sample_srs(rng, 5, 6), std::domain_error);

  const auto pick = sample_srs(rng, 100, 17);
  CHECK(pick.size() == 17);
  std::set<std::uint64_t> uniq(pick.begin(), pick.end());
  CHECK(uniq.size() == 17);
  for (const auto i : pick) CHECK(i < 100);
}

TEST_CASE("sample_srs draws subsets uniformly (chi-square)") {
  // all C(5,2) = 10 subsets equally likely
  const std::uint64_t R = 100'000;
  std::vector<std::uint64_t> observed(10, 0);
  for (std::uint64_t r = 0; r < R; ++r) {
    Rng rng(1414, r);
    auto pick = sample_srs(rng, 5, 2);
    const std::uint64_t a = std::min(pick[0], pick[1]);
    const std::uint64_t b = std::max(pick[0], pick[1]);
    // rank of {a, b} among the ordered pairs
    std::uint64_t cell = 0;
    for (std::uint64_t i = 0; i < a; ++i) cell += 4 - i;
    cell += b - a - 1;
    ++observed[cell];
  }
  std::vector<double> expected(10, static_cast<double>(R) / 10.0);
  const auto [stat, cells] = test::chi_square_statistic(observed, expected);
  REQUIRE(cells == 10);
  CHECK(stat <
        test::chi_square_critical(static_cast<double>(cells - 1), 1e-4));
}

TEST_CASE("sample_srs inclusion probability n/N") {
  const std::uint64_t R = 100'000;
  std::vector<std::uint64_t> hits(10, 0);
  for (std::uint64_t r = 0; r < R; ++r) {
    Rng rng(2718, r);
    for (const auto i : sample_srs(rng, 10, 3)) ++hits[i];
  }
  for (const auto h : hits) {
    const double freq = static_cast<double>(h) / static_cast<double>(R);
    CHECK(std::fabs(freq - 0.3) <= 0.006);
  }
}

TEST_SUITE_END();
