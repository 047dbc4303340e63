#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace compcent {

/// Acceptance threshold on the p-value for the standard-normal hypothesis.
inline constexpr double kDecisionThreshold = 0.1;
inline constexpr std::size_t kDefaultReplicates = 10000;
inline constexpr std::size_t kMinReplicates = 2500;

/// Known-parameter Anderson-Darling critical value at the 10% level.
inline constexpr double kAndersonDarlingCritical10 = 1.933;

enum class Decision { Accept, Reject };

struct GoFReport {
  std::string test_name;
  double statistic = 0.0;
  double p_value = 0.0;
  std::size_t replicates = 0;  // 0 for tests with an analytic p-value
  std::uint64_t seed = 0;
  Decision decision = Decision::Reject;
};

double normal_cdf(double x);

/// Two-sided one-sample KS distance to the standard normal CDF. n >= 5.
double ks_statistic(std::span<const double> sample);

/// Sorted KS statistics of `replicates` standard-normal samples of size n.
/// Replicate i draws from its own stream derived from (seed, n, i).
class KsNullDistribution {
 public:
  KsNullDistribution(std::size_t n, std::size_t replicates, std::uint64_t seed);

  /// Fraction of synthetic statistics >= observed.
  double p_value(double observed) const;

  std::size_t sample_size() const noexcept { return n_; }
  std::size_t replicates() const noexcept { return stats_.size(); }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<double>& statistics() const noexcept { return stats_; }

  /// Shared, memoised table for (n, replicates, seed).
  static std::shared_ptr<const KsNullDistribution> cached(std::size_t n, std::size_t replicates,
                                                          std::uint64_t seed);

 private:
  std::size_t n_;
  std::uint64_t seed_;
  std::vector<double> stats_;
};

/// Monte-Carlo KS test of the standard-normal hypothesis.
GoFReport ks_p_value(std::span<const double> sample, std::size_t replicates = kDefaultReplicates,
                     std::uint64_t seed = 0);

/// Anderson-Darling A^2 against the fully specified N(0, 1). Decision uses
/// the 10% critical value; p_value is the asymptotic tail probability.
GoFReport anderson_darling(std::span<const double> sample);

/// P(A^2 <= z) for the known-parameter asymptotic distribution.
double anderson_darling_cdf(double z);

const char* to_string(Decision d);

}  // namespace compcent
