#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "compcent/gof.hpp"
#include "compcent/measures.hpp"

namespace compcent {

/// Parameters of the five synthetic "measures".
struct ArbMeasureSpec {
  enum class ExponentialParam { Mean, Rate };

  double uniform_low = 0.0;
  double uniform_high = 1.0;
  double normal_mean = 1e5;
  double normal_sd = 1e3;
  double lognormal_mu = 2.0;  // of the underlying normal
  double lognormal_sigma = 2.0;
  double exponential = 1e-3;
  ExponentialParam exponential_param = ExponentialParam::Mean;
  double pareto_min = 1e2;
  double pareto_alpha = 3.0;

  double exponential_mean() const {
    return exponential_param == ExponentialParam::Mean ? exponential : 1.0 / exponential;
  }
  /// Throws InvalidInput for out-of-range parameters.
  void validate() const;
};

/// Five vectors of length n: uniform, normal, log-normal, exponential, Pareto.
std::vector<MeasureVector> sample_arb(const ArbMeasureSpec& spec, std::size_t n,
                                      std::uint64_t seed);

/// `count` independent standard-normal vectors of length n.
std::vector<MeasureVector> sample_normal_control(std::size_t count, std::size_t n,
                                                 std::uint64_t seed);

struct Band {
  double mean = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = 0;
};

/// mean +/- 1.96 standard errors.
Band confidence_band(const std::vector<double>& xs);

struct StudyRow {
  std::size_t n = 0;
  Band p_value;       // over the p-value realizations
  Band composite_ks;  // KS statistic of the composite scores
  Band null_ks;       // KS statistic of standard-normal samples of the same size
};

struct StudyOptions {
  std::vector<std::size_t> sizes = {100, 1000, 10000};
  std::size_t p_realizations = 10;
  std::size_t ks_realizations = 100;
  std::size_t replicates = kDefaultReplicates;
  std::uint64_t seed = 0;
  ArbMeasureSpec spec;
  /// Replace the five measures with five i.i.d. standard normals.
  bool normal_control = false;
};

struct StudyResult {
  StudyOptions options;
  std::vector<StudyRow> rows;
};

/// For each size and realization: sample, standardize, combine, KS-test.
/// Realization r at size n uses seeds derived from (seed, n, r) only.
StudyResult gof_vs_n_study(const StudyOptions& options);

/// Upper end of the composite KS band at n. Throws InvalidInput if n was
/// not part of the study.
double max_error_estimate(const StudyResult& study, std::size_t n);

std::string study_to_csv(const StudyResult& study);
nlohmann::json study_to_json(const StudyResult& study);

}  // namespace compcent
