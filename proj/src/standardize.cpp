#include "compcent/standardize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "compcent/errors.hpp"

namespace compcent {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool is_constant(std::span<const double> xs) {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return *lo == *hi;
}

void require_finite(std::span<const double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) throw InvalidInput("non-finite value in sample");
  }
}

void require_loglik_sample(std::span<const double> xs) {
  if (xs.size() < 3) throw InvalidInput("Box-Cox likelihood needs at least 3 values");
  for (double x : xs) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput("Box-Cox needs positive finite values");
  }
  if (is_constant(xs)) throw Degenerate("Box-Cox likelihood of a constant sample");
}

double loglik_unchecked(std::span<const double> xs, std::span<const double> logs, double sum_log,
                        double lambda, LoglikCentre centre, std::vector<double>& scratch) {
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    scratch[i] = lambda == 0.0 ? logs[i] : std::expm1(lambda * logs[i]) / lambda;
  }
  const double c = centre == LoglikCentre::Transformed
                       ? mean(scratch)
                       : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double v : scratch) ss += (v - c) * (v - c);
  const double var = ss / static_cast<double>(n);
  if (!std::isfinite(var)) return kNegInf;
  if (var <= 0.0) throw Degenerate("Box-Cox transform collapsed the sample");
  return (lambda - 1.0) * sum_log - 0.5 * static_cast<double>(n) * std::log(var);
}

}  // namespace

double box_cox(double x, double lambda) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput("Box-Cox needs a positive finite value");
  if (lambda == 0.0) return std::log(x);
  return std::expm1(lambda * std::log(x)) / lambda;
}

double inverse_box_cox(double y, double lambda) {
  if (lambda == 0.0) return std::exp(y);
  const double base = lambda * y;
  if (!(base > -1.0)) throw InvalidInput("value outside the range of the Box-Cox transform");
  return std::exp(std::log1p(base) / lambda);
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw InvalidInput("mean of an empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs) {
  if (xs.size() < 2) throw InvalidInput("standard deviation needs at least 2 values");
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double skewness(std::span<const double> xs) {
  if (xs.size() < 3) throw InvalidInput("skewness needs at least 3 values");
  require_finite(xs);
  if (is_constant(xs)) throw Degenerate("skewness of a constant sample");
  const double n = static_cast<double>(xs.size());
  const double m = mean(xs);
  double m2 = 0.0, m3 = 0.0;
  for (double x : xs) {
    const double d = x - m;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  const double g1 = m3 / std::pow(m2, 1.5);
  return g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
}

double box_cox_loglik(std::span<const double> xs, double lambda, LoglikCentre centre) {
  require_loglik_sample(xs);
  std::vector<double> logs(xs.size()), scratch(xs.size());
  std::transform(xs.begin(), xs.end(), logs.begin(), [](double x) { return std::log(x); });
  const double sum_log = std::accumulate(logs.begin(), logs.end(), 0.0);
  return loglik_unchecked(xs, logs, sum_log, lambda, centre, scratch);
}

double fit_lambda(std::span<const double> xs, const LambdaSearch& search) {
  require_loglik_sample(xs);
  if (!(search.upper > search.lower) || !(search.grid_step > 0.0) || !(search.tolerance > 0.0)) {
    throw InvalidInput("invalid lambda search range");
  }
  std::vector<double> logs(xs.size()), scratch(xs.size());
  std::transform(xs.begin(), xs.end(), logs.begin(), [](double x) { return std::log(x); });
  const double sum_log = std::accumulate(logs.begin(), logs.end(), 0.0);
  auto f = [&](double lambda) {
    return loglik_unchecked(xs, logs, sum_log, lambda, search.centre, scratch);
  };

  const auto steps =
      static_cast<long>(std::llround((search.upper - search.lower) / search.grid_step));
  double best_lambda = search.lower, best_value = kNegInf;
  for (long k = 0; k <= steps; ++k) {
    const double lambda =
        k == steps ? search.upper : search.lower + static_cast<double>(k) * search.grid_step;
    const double value = f(lambda);
    if (value > best_value) {
      best_value = value;
      best_lambda = lambda;
    }
  }

  // Golden-section refinement inside the neighbouring grid cells.
  constexpr double kInvPhi = 0.6180339887498949;
  double a = std::max(search.lower, best_lambda - search.grid_step);
  double b = std::min(search.upper, best_lambda + search.grid_step);
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > search.tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double refined = 0.5 * (a + b);
  return f(refined) >= best_value ? refined : best_lambda;
}

StandardizedMeasure standardize(const MeasureVector& m, const StandardizeOptions& options) {
  const std::size_t n = m.values.size();
  if (n < 3) throw InvalidInput("standardize needs at least 3 values");
  require_finite(m.values);
  if (is_constant(m.values)) throw Degenerate("standardize: measure '" + m.name + "' is constant");

  TransformParams params;
  std::vector<double> y(m.values);
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  if (*lo <= 0.0) params.pre_shift = options.shift_fraction * (*hi - *lo) - *lo;
  if (params.pre_shift != 0.0) {
    for (double& v : y) v += params.pre_shift;
  }

  params.mean_scale = mean(y);
  for (double& v : y) v /= params.mean_scale;

  // Skewness step: keep Box-Cox only if it strictly reduces |skewness|.
  std::vector<double> z = y;
  const double skew_before = std::abs(skewness(y));
  const double lambda = fit_lambda(y, options.search);
  std::vector<double> transformed(n);
  bool usable = true;
  for (std::size_t i = 0; i < n && usable; ++i) {
    transformed[i] = box_cox(y[i], lambda);
    usable = std::isfinite(transformed[i]);
  }
  if (usable && !is_constant(transformed) &&
      std::abs(skewness(transformed)) < skew_before) {
    z = std::move(transformed);
    params.lambda = lambda;
  }

  params.post_mean = mean(z);
  for (double& v : z) v -= params.post_mean;
  params.post_std = sample_std(z);
  for (double& v : z) v /= params.post_std;

  if (!m.bigger_is_better) {
    params.flipped = true;
    for (double& v : z) v = -v;
  }
  return StandardizedMeasure{m.name, std::move(z), params};
}

MeasureVector invert(const StandardizedMeasure& sm) {
  if (!sm.transform) throw InvalidInput("measure '" + sm.name + "' has no transform record");
  const TransformParams& p = *sm.transform;
  MeasureVector out{sm.name, std::vector<double>(sm.values.size()), !p.flipped};
  for (std::size_t i = 0; i < sm.values.size(); ++i) {
    const double v = p.flipped ? -sm.values[i] : sm.values[i];
    const double z = v * p.post_std + p.post_mean;
    const double y = p.lambda ? inverse_box_cox(z, *p.lambda) : z;
    out.values[i] = y * p.mean_scale - p.pre_shift;
  }
  return out;
}

}  // namespace compcent
