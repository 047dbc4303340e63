#include "compcent/gof.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <tuple>

#include "compcent/errors.hpp"
#include "compcent/parallel.hpp"
#include "compcent/random.hpp"

namespace compcent {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double ks_sorted(std::span<const double> sorted) {
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = normal_cdf(sorted[i]);
    const double above = static_cast<double>(i + 1) / n - cdf;
    const double below = cdf - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return d;
}

double log_normal_cdf(double x) { return std::log(0.5 * std::erfc(-x * kInvSqrt2)); }

void require_finite(std::span<const double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) throw InvalidInput("goodness-of-fit sample contains non-finite values");
  }
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double ks_statistic(std::span<const double> sample) {
  if (sample.size() < 5) throw InvalidInput("KS statistic needs at least 5 values");
  require_finite(sample);
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  return ks_sorted(sorted);
}

KsNullDistribution::KsNullDistribution(std::size_t n, std::size_t replicates, std::uint64_t seed)
    : n_(n), seed_(seed), stats_(replicates, 0.0) {
  if (n < 5) throw InvalidInput("KS null distribution needs n >= 5");
  if (replicates < 1) throw InvalidInput("KS null distribution needs replicates");
  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (replicates + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t c) {
    std::vector<double> sample(n);
    const std::size_t end = std::min(replicates, (c + 1) * kChunk);
    for (std::size_t r = c * kChunk; r < end; ++r) {
      Rng rng(derive_seed(seed, {n, r}));
      for (double& x : sample) x = rng.normal();
      std::sort(sample.begin(), sample.end());
      stats_[r] = ks_sorted(sample);
    }
  });
  std::sort(stats_.begin(), stats_.end());
}

double KsNullDistribution::p_value(double observed) const {
  const auto first = std::lower_bound(stats_.begin(), stats_.end(), observed);
  return static_cast<double>(stats_.end() - first) / static_cast<double>(stats_.size());
}

std::shared_ptr<const KsNullDistribution> KsNullDistribution::cached(std::size_t n,
                                                                     std::size_t replicates,
                                                                     std::uint64_t seed) {
  using Key = std::tuple<std::size_t, std::size_t, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const KsNullDistribution>> tables;
  static std::deque<Key> age;
  constexpr std::size_t kCapacity = 32;

  const Key key{n, replicates, seed};
  {
    std::lock_guard lock(mutex);
    if (auto it = tables.find(key); it != tables.end()) return it->second;
  }
  auto table = std::make_shared<const KsNullDistribution>(n, replicates, seed);
  std::lock_guard lock(mutex);
  auto [it, inserted] = tables.emplace(key, table);
  if (inserted) {
    age.push_back(key);
    if (age.size() > kCapacity) {
      tables.erase(age.front());
      age.pop_front();
    }
  }
  return it->second;
}

GoFReport ks_p_value(std::span<const double> sample, std::size_t replicates, std::uint64_t seed) {
  if (replicates < kMinReplicates) {
    throw InvalidInput("KS Monte-Carlo test needs at least " + std::to_string(kMinReplicates) +
                       " replicates");
  }
  const double d = ks_statistic(sample);
  const auto table = KsNullDistribution::cached(sample.size(), replicates, seed);
  GoFReport r;
  r.test_name = "kolmogorov-smirnov";
  r.statistic = d;
  r.p_value = table->p_value(d);
  r.replicates = replicates;
  r.seed = seed;
  r.decision = r.p_value > kDecisionThreshold ? Decision::Accept : Decision::Reject;
  return r;
}

double anderson_darling_cdf(double z) {
  // Marsaglia & Marsaglia (2004) approximation of the limiting distribution.
  if (!(z > 0.0)) return 0.0;
  if (!std::isfinite(z)) return 1.0;
  if (z < 2.0) {
    return std::exp(-1.2337141 / z) / std::sqrt(z) *
           (2.00012 + (0.247105 - (0.0649821 - (0.0347962 - (0.011672 - 0.00168691 * z) * z) * z) * z) * z);
  }
  return std::exp(-std::exp(1.0776 - (2.30695 - (0.43424 - (0.082433 - (0.008056 - 0.0003146 * z) * z) * z) * z) * z));
}

GoFReport anderson_darling(std::span<const double> sample) {
  if (sample.size() < 8) throw InvalidInput("Anderson-Darling test needs at least 8 values");
  require_finite(sample);
  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double weight = static_cast<double>(2 * i + 1);
    s += weight * (log_normal_cdf(x[i]) + log_normal_cdf(-x[n - 1 - i]));
  }
  const double a2 = -static_cast<double>(n) - s / static_cast<double>(n);

  GoFReport r;
  r.test_name = "anderson-darling";
  r.statistic = a2;
  r.p_value = std::clamp(1.0 - anderson_darling_cdf(a2), 0.0, 1.0);
  r.decision = a2 < kAndersonDarlingCritical10 ? Decision::Accept : Decision::Reject;
  return r;
}

const char* to_string(Decision d) { return d == Decision::Accept ? "accept" : "reject"; }

}  // namespace compcent
