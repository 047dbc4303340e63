#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compcent/measures.hpp"

namespace compcent {

double box_cox(double x, double lambda);

/// Inverse of box_cox. Throws InvalidInput when lambda * y + 1 <= 0.
double inverse_box_cox(double y, double lambda);

/// Which centre the variance term of the profile log-likelihood uses.
enum class LoglikCentre {
  Transformed,  // mean of the transformed values (consistent form)
  Raw,          // mean of the raw values, as literally printed
};

/// (lambda - 1) sum ln x - (N / 2) ln( sum (x~ - c)^2 / N ).
double box_cox_loglik(std::span<const double> xs, double lambda,
                      LoglikCentre centre = LoglikCentre::Transformed);

struct LambdaSearch {
  double lower = -5.0;
  double upper = 5.0;
  double grid_step = 0.1;
  double tolerance = 1e-4;
  LoglikCentre centre = LoglikCentre::Transformed;
};

/// Maximum-likelihood Box-Cox exponent: grid scan, then golden-section
/// refinement around the best grid point. Ties take the smallest lambda.
double fit_lambda(std::span<const double> xs, const LambdaSearch& search = {});

/// Adjusted Fisher-Pearson sample skewness G1.
double skewness(std::span<const double> xs);

double mean(std::span<const double> xs);

/// Sample standard deviation with the n - 1 denominator.
double sample_std(std::span<const double> xs);

/// Everything needed to map standardized scores back to raw values.
struct TransformParams {
  double pre_shift = 0.0;
  double mean_scale = 1.0;
  std::optional<double> lambda;  // empty: Box-Cox rejected, identity kept
  double post_mean = 0.0;
  double post_std = 1.0;
  bool flipped = false;
};

/// Zero-mean, unit-variance score vector. `transform` is set for measures
/// produced by standardize() and empty for combinations of such measures.
struct StandardizedMeasure {
  std::string name;
  std::vector<double> values;
  std::optional<TransformParams> transform;
};

struct StandardizeOptions {
  LambdaSearch search;
  /// Minimum lands this fraction of the range above zero after a pre-shift.
  double shift_fraction = 1e-6;
};

/// Skewness correction (mean-one rescale + Box-Cox, kept only if |skew|
/// strictly drops), centring, scaling by the sample standard deviation and
/// negation for smaller-is-better measures. Non-positive inputs are shifted
/// up first. Throws InvalidInput for n < 3 and Degenerate for constant input.
StandardizedMeasure standardize(const MeasureVector& m, const StandardizeOptions& options = {});

/// Reconstructs the raw measure. Throws InvalidInput without a parameter
/// record or when a value lies outside the Box-Cox range.
MeasureVector invert(const StandardizedMeasure& sm);

}  // namespace compcent
