#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "compcent/errors.hpp"
#include "compcent/gof.hpp"
#include "support.hpp"

using namespace compcent;

TEST_CASE("normal_cdf") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(normal_cdf(-40.0) >= 0.0);
}

TEST_CASE("ks_statistic") {
  // Five points clustered at zero: the empirical CDF jumps from 0 to 1 there.
  const std::vector<double> cluster = {-2e-12, -1e-12, 0.0, 1e-12, 2e-12};
  CHECK(ks_statistic(cluster) == doctest::Approx(0.5).epsilon(1e-9));

  // Hand evaluation on a small sample.
  const std::vector<double> xs = {-1.0, -0.5, 0.0, 0.5, 1.0};
  double d = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double f = normal_cdf(xs[i]);
    d = std::max({d, (i + 1) / 5.0 - f, f - i / 5.0});
  }
  CHECK(ks_statistic(xs) == doctest::Approx(d).epsilon(1e-15));

  auto big = testing::normal_sample(10000, 1);
  CHECK(ks_statistic(big) < 0.02);

  Rng rng(2);
  std::vector<double> uni(200);
  for (auto& u : uni) u = rng.uniform();
  CHECK(ks_statistic(uni) > 0.25);

  CHECK_THROWS_AS(ks_statistic(std::vector<double>{1, 2, 3, 4}), InvalidInput);
}

TEST_CASE("ks_statistic range and permutation invariance") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto xs = testing::normal_sample(50, 100 + seed, 0.3 * static_cast<double>(seed % 5));
    const double d = ks_statistic(xs);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    std::reverse(xs.begin(), xs.end());
    CHECK(ks_statistic(xs) == d);
  }
}

TEST_CASE("ks_p_value") {
  const auto shifted = testing::normal_sample(200, 3, 1.0);
  const auto r = ks_p_value(shifted, 2500, 9);
  CHECK(r.p_value < 0.01);
  CHECK(r.decision == Decision::Reject);
  CHECK(r.test_name == "kolmogorov-smirnov");
  CHECK(r.replicates == 2500);
  CHECK(r.seed == 9);

  const auto null = testing::normal_sample(200, 4);
  const auto a = ks_p_value(null, 2500, 9);
  const auto b = ks_p_value(null, 2500, 9);
  CHECK(a.p_value == b.p_value);
  CHECK(a.statistic == b.statistic);
  CHECK((a.decision == Decision::Accept) == (a.p_value > kDecisionThreshold));
  const double q = a.p_value * 2500;
  CHECK(q == std::round(q));

  CHECK_THROWS_AS(ks_p_value(null, 2499, 0), InvalidInput);
}

TEST_CASE("KS null table") {
  const KsNullDistribution t(40, 3000, 5);
  CHECK(t.replicates() == 3000);
  CHECK(std::is_sorted(t.statistics().begin(), t.statistics().end()));
  CHECK(t.p_value(0.0) == 1.0);
  CHECK(t.p_value(1.0) == 0.0);
  CHECK(t.p_value(t.statistics().back()) == doctest::Approx(1.0 / 3000));
  // Monotone in the observed statistic.
  double last = 1.0;
  for (double d = 0.0; d <= 0.4; d += 0.005) {
    const double p = t.p_value(d);
    CHECK(p <= last);
    last = p;
  }
  const auto c1 = KsNullDistribution::cached(40, 3000, 5);
  CHECK(c1 == KsNullDistribution::cached(40, 3000, 5));
  CHECK(c1->statistics() == t.statistics());
}

TEST_CASE("null p-values are uniform") {
  // 1000 seeded null samples into 10 bins; chi-square 9 dof, 0.999 quantile 27.88.
  std::vector<int> bins(10, 0);
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto xs = testing::normal_sample(50, 10000 + s);
    const double p = ks_p_value(xs, 10000, 77).p_value;
    bins[std::min(9, static_cast<int>(p * 10))]++;
  }
  double chi2 = 0.0;
  for (int b : bins) chi2 += (b - 100.0) * (b - 100.0) / 100.0;
  CHECK(chi2 < 27.88);
}

TEST_CASE("mean null KS statistic shrinks with n") {
  const auto a = KsNullDistribution::cached(100, 2500, 1);
  const auto b = KsNullDistribution::cached(1000, 2500, 1);
  auto avg = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  CHECK(avg(b->statistics()) < avg(a->statistics()));
  CHECK(avg(b->statistics()) * std::sqrt(1000.0) == doctest::Approx(0.8687).epsilon(0.03));
}

TEST_CASE("anderson_darling") {
  CHECK(anderson_darling_cdf(1.933) == doctest::Approx(0.90).epsilon(2e-3));
  CHECK(anderson_darling_cdf(2.492) == doctest::Approx(0.95).epsilon(2e-3));
  CHECK(anderson_darling_cdf(3.857) == doctest::Approx(0.99).epsilon(2e-3));

  int accept = 0;
  for (std::uint64_t s = 0; s < 400; ++s) {
    const auto r = anderson_darling(testing::normal_sample(500, 20000 + s));
    if (r.decision == Decision::Accept) ++accept;
  }
  CHECK(accept >= 340);
  CHECK(accept <= 380);

  std::vector<double> extremes;
  for (int i = 0; i < 10; ++i) extremes.push_back(i % 2 ? 3.0 : -3.0);
  const auto e = anderson_darling(extremes);
  CHECK(e.decision == Decision::Reject);
  CHECK(e.test_name == "anderson-darling");

  Rng rng(3);
  std::vector<double> uni(200);
  for (auto& u : uni) u = rng.uniform();
  CHECK(anderson_darling(uni).decision == Decision::Reject);

  CHECK_THROWS_AS(anderson_darling(std::vector<double>{1, 2, 3, 4, 5, 6, 7}), InvalidInput);
  CHECK_THROWS_AS(anderson_darling(std::vector<double>{1, 2, 3, 4, 5, 6, 7, NAN}), InvalidInput);
  CHECK(std::string(to_string(Decision::Accept)) == "accept");
}
