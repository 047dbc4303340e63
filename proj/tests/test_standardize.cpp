#include <doctest.h>

#include <cmath>
#include <numeric>

#include "compcent/errors.hpp"
#include "compcent/measures.hpp"
#include "compcent/simulate.hpp"
#include "compcent/standardize.hpp"
#include "support.hpp"

using namespace compcent;

TEST_CASE("box_cox") {
  for (double l : {-3.0, -0.5, 0.0, 0.7, 2.0}) CHECK(box_cox(1.0, l) == 0.0);
  CHECK(box_cox(std::exp(1.0), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(box_cox(3.0, 2.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(box_cox(2.5, 1e-12) == doctest::Approx(std::log(2.5)).epsilon(1e-10));
  CHECK_THROWS_AS(box_cox(0.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(box_cox(-1.0, 1.0), InvalidInput);
  for (double l : {-2.0, 0.0, 0.3, 1.5})
    for (double x : {0.1, 1.0, 7.0}) CHECK(inverse_box_cox(box_cox(x, l), l) == doctest::Approx(x).epsilon(1e-13));
  CHECK_THROWS_AS(inverse_box_cox(-1.0, 2.0), InvalidInput);
}

TEST_CASE("box_cox_loglik") {
  const auto xs = testing::lognormal_sample(2000, 11);
  CHECK(box_cox_loglik(xs, 0.0) > box_cox_loglik(xs, 2.0));

  // Direct summation with a repeated point.
  std::vector<double> ys = {0.5, 1.2, 2.0, 3.3, 0.8};
  ys.push_back(1.2);
  const double lam = 0.4;
  double slog = 0.0, mt = 0.0;
  std::vector<double> t;
  for (double y : ys) {
    slog += std::log(y);
    t.push_back((std::pow(y, lam) - 1.0) / lam);
    mt += t.back();
  }
  mt /= ys.size();
  double ss = 0.0;
  for (double v : t) ss += (v - mt) * (v - mt);
  const double n = static_cast<double>(ys.size());
  CHECK(box_cox_loglik(ys, lam) == doctest::Approx((lam - 1) * slog - n / 2 * std::log(ss / n)).epsilon(1e-12));

  // Raw-centre variant uses the mean of the untransformed values.
  double mr = std::accumulate(ys.begin(), ys.end(), 0.0) / n, sr = 0.0;
  for (double v : t) sr += (v - mr) * (v - mr);
  CHECK(box_cox_loglik(ys, lam, LoglikCentre::Raw) ==
        doctest::Approx((lam - 1) * slog - n / 2 * std::log(sr / n)).epsilon(1e-12));

  CHECK_THROWS_AS(box_cox_loglik(std::vector<double>{2, 2, 2}, 1.0), Degenerate);
}

TEST_CASE("fit_lambda") {
  auto xs = testing::lognormal_sample(10000, 21);
  double l = fit_lambda(xs);
  CHECK(l >= -0.1);
  CHECK(l <= 0.1);
  const double best = box_cox_loglik(xs, l);
  for (int k = 0; k <= 40; ++k) CHECK(best >= box_cox_loglik(xs, -5.0 + 0.25 * k) - 1e-9);

  Rng rng(22);
  std::vector<double> nrm(10000);
  for (auto& x : nrm) x = rng.normal(1e5, 1e3);
  const double m = std::accumulate(nrm.begin(), nrm.end(), 0.0) / nrm.size();
  for (auto& x : nrm) x /= m;
  l = fit_lambda(nrm);
  CHECK(l >= 0.2);
  CHECK(l <= 5.0);
  CHECK(std::abs(skewness(nrm)) < 0.1);

  std::vector<double> ex(10000);
  for (auto& x : ex) x = rng.exponential(1.0);
  l = fit_lambda(ex);
  CHECK(l >= 0.2);
  CHECK(l <= 0.45);
  // Fine grid oracle.
  double grid_best = -5.0, grid_val = -INFINITY;
  for (int k = 0; k <= 10000; ++k) {
    const double g = -5.0 + 0.001 * k;
    const double v = box_cox_loglik(ex, g);
    if (v > grid_val) {
      grid_val = v;
      grid_best = g;
    }
  }
  CHECK(std::abs(l - grid_best) < 2e-3);
}

TEST_CASE("skewness") {
  CHECK(skewness(std::vector<double>{-1, 0, 1}) == 0.0);
  CHECK(skewness(std::vector<double>{0, 0, 1}) > 0.0);
  const std::vector<double> xs = {1, 2, 3, 4, 100};
  const double n = 5, m = 22;
  double m2 = 0, m3 = 0;
  for (double x : xs) {
    m2 += (x - m) * (x - m) / n;
    m3 += (x - m) * (x - m) * (x - m) / n;
  }
  const double g1 = m3 / std::pow(m2, 1.5);
  CHECK(skewness(xs) == doctest::Approx(g1 * std::sqrt(n * (n - 1)) / (n - 2)).epsilon(1e-13));
  CHECK_THROWS_AS(skewness(std::vector<double>{3, 3, 3}), Degenerate);
  CHECK_THROWS_AS(skewness(std::vector<double>{1, 2}), InvalidInput);
}

TEST_CASE("standardize moments and orientation") {
  const auto sm = standardize({"x", testing::lognormal_sample(300, 31), true});
  CHECK(std::abs(mean(sm.values)) < 1e-9);
  CHECK(std::abs(sample_std(sm.values) - 1.0) < 1e-9);
  REQUIRE(sm.transform.has_value());
  REQUIRE(sm.transform->lambda.has_value());

  // Directed 4-cycle with a chord 0->2: node 0 has the smallest out-farness.
  const auto g = build_graph(std::vector<LabeledEdge>{
      {"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "a", 1}, {"a", "c", 1}});
  const auto farness = aspl(g, Direction::Out);
  const auto s = standardize(farness);
  const auto raw_min = std::min_element(farness.values.begin(), farness.values.end()) - farness.values.begin();
  const auto std_max = std::max_element(s.values.begin(), s.values.end()) - s.values.begin();
  CHECK(raw_min == std_max);
  CHECK(s.transform->flipped);

  CHECK_THROWS_AS(standardize({"c", {4, 4, 4, 4}, true}), Degenerate);
  CHECK_THROWS_AS(standardize({"s", {1, 2}, true}), InvalidInput);
}

TEST_CASE("standardize shifts non-positive input") {
  const MeasureVector m{"neg", {-3, 0, 1, 2, 8}, true};
  const auto sm = standardize(m);
  CHECK(sm.transform->pre_shift == doctest::Approx(1e-6 * 11 + 3).epsilon(1e-14));
  const auto back = invert(sm);
  for (std::size_t i = 0; i < m.values.size(); ++i) CHECK(std::abs(back.values[i] - m.values[i]) < 1e-9 * 11);
}

TEST_CASE("invert hand fixture") {
  const MeasureVector m{"h", {1, 2, 4}, true};
  const auto sm = standardize(m);
  const auto& p = *sm.transform;
  CHECK(p.pre_shift == 0.0);
  CHECK(p.mean_scale == doctest::Approx(7.0 / 3.0));
  // Geometric values: the log transform is exactly symmetric.
  REQUIRE(p.lambda.has_value());
  CHECK(std::abs(*p.lambda) < 1e-4);
  for (std::size_t i = 0; i < 3; ++i) {
    double y = sm.values[i] * p.post_std + p.post_mean;
    if (p.lambda) y = *p.lambda == 0.0 ? std::exp(y) : std::pow(*p.lambda * y + 1.0, 1.0 / *p.lambda);
    CHECK(y * p.mean_scale == doctest::Approx(m.values[i]).epsilon(1e-12));
  }
  CHECK(invert(sm).values[2] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("identity branch inverts affinely") {
  // Symmetric input: Box-Cox cannot strictly reduce a zero skewness.
  const MeasureVector m{"sym", {1, 2, 3, 4, 5}, false};
  const auto sm = standardize(m);
  CHECK_FALSE(sm.transform->lambda.has_value());
  const auto back = invert(sm);
  for (std::size_t i = 0; i < 5; ++i) CHECK(back.values[i] == doctest::Approx(m.values[i]).epsilon(1e-12));
  CHECK_FALSE(back.bigger_is_better);

  StandardizedMeasure bare{"x", {0.0, 1.0}, std::nullopt};
  CHECK_THROWS_AS(invert(bare), InvalidInput);
}

TEST_CASE("standardize round trip over random measures") {
  const ArbMeasureSpec spec;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& m : sample_arb(spec, 50 + 10 * seed, 3100 + seed)) {
      const auto sm = standardize(m);
      CHECK(std::abs(mean(sm.values)) < 1e-9);
      CHECK(std::abs(sample_std(sm.values) - 1.0) < 1e-9);
      const auto back = invert(sm);
      for (std::size_t i = 0; i < m.values.size(); ++i)
        CHECK(std::abs(back.values[i] - m.values[i]) <= 1e-9 * std::abs(m.values[i]));
    }
  }
}

TEST_CASE("standardize is scale invariant") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto xs = testing::lognormal_sample(200, 3300 + seed);
    const auto a = standardize({"a", xs, true});
    for (auto& x : xs) x *= 1234.5;
    const auto b = standardize({"b", xs, true});
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(a.values[i] - b.values[i]) < 1e-6);
  }
}

TEST_CASE("standardize preserves ranking") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (bool big : {true, false}) {
      const auto xs = testing::lognormal_sample(100, 3500 + seed);
      const auto s = standardize({"r", xs, big});
      for (std::size_t i = 1; i < xs.size(); ++i) {
        const bool raw_less = xs[i - 1] < xs[i];
        const bool std_less = s.values[i - 1] < s.values[i];
        CHECK(raw_less == (big ? std_less : !std_less));
      }
    }
  }
}

TEST_CASE("accepted Box-Cox branch reduces skewness") {
  const ArbMeasureSpec spec;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& m : sample_arb(spec, 300, 3700 + seed)) {
      const auto sm = standardize(m);
      const auto& p = *sm.transform;
      std::vector<double> scaled = m.values;
      for (auto& x : scaled) x = (x + p.pre_shift) / p.mean_scale;
      if (p.lambda) CHECK(std::abs(skewness(sm.values)) < std::abs(skewness(scaled)));
    }
  }
}
