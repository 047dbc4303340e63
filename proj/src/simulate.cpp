#include "compcent/simulate.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "compcent/composite.hpp"
#include "compcent/errors.hpp"
#include "compcent/parallel.hpp"
#include "compcent/random.hpp"
#include "compcent/standardize.hpp"

namespace compcent {
namespace {

constexpr std::uint64_t kNullTableStream = 0x6e756c6cULL;
constexpr std::uint64_t kNullSampleStream = 0x73796e74ULL;

nlohmann::json band_json(const Band& b) {
  return {{"mean", b.mean}, {"lower", b.lower}, {"upper", b.upper}, {"count", b.count}};
}

}  // namespace

void ArbMeasureSpec::validate() const {
  auto bad = [](const char* what) { throw InvalidInput(std::string("invalid parameter: ") + what); };
  if (!(uniform_high > uniform_low) || uniform_low < 0.0) bad("uniform bounds");
  if (!(normal_sd > 0.0)) bad("normal sd");
  if (!(lognormal_sigma > 0.0)) bad("log-normal sigma");
  if (!(exponential > 0.0)) bad("exponential parameter");
  if (!(pareto_min > 0.0) || !(pareto_alpha > 0.0)) bad("Pareto parameters");
}

std::vector<MeasureVector> sample_arb(const ArbMeasureSpec& spec, std::size_t n,
                                      std::uint64_t seed) {
  if (n < 10) throw InvalidInput("sample_arb needs n >= 10");
  spec.validate();
  std::vector<MeasureVector> out = {
      {"uniform", std::vector<double>(n), true},
      {"normal", std::vector<double>(n), true},
      {"log-normal", std::vector<double>(n), true},
      {"exponential", std::vector<double>(n), true},
      {"pareto", std::vector<double>(n), true},
  };
  for (std::size_t k = 0; k < out.size(); ++k) {
    Rng rng(derive_seed(seed, {k}));
    for (double& x : out[k].values) {
      switch (k) {
        case 0: x = rng.uniform(spec.uniform_low, spec.uniform_high); break;
        case 1: x = rng.normal(spec.normal_mean, spec.normal_sd); break;
        case 2: x = std::exp(rng.normal(spec.lognormal_mu, spec.lognormal_sigma)); break;
        case 3: x = rng.exponential(spec.exponential_mean()); break;
        default: x = rng.pareto(spec.pareto_min, spec.pareto_alpha); break;
      }
    }
  }
  return out;
}

std::vector<MeasureVector> sample_normal_control(std::size_t count, std::size_t n,
                                                 std::uint64_t seed) {
  std::vector<MeasureVector> out;
  for (std::size_t k = 0; k < count; ++k) {
    Rng rng(derive_seed(seed, {k}));
    MeasureVector m{"normal-" + std::to_string(k), std::vector<double>(n), true};
    for (double& x : m.values) x = rng.normal();
    out.push_back(std::move(m));
  }
  return out;
}

Band confidence_band(const std::vector<double>& xs) {
  Band b;
  b.count = xs.size();
  if (xs.empty()) return b;
  b.mean = mean(xs);
  const double half = xs.size() > 1 ? 1.96 * sample_std(xs) / std::sqrt(static_cast<double>(xs.size())) : 0.0;
  b.lower = b.mean - half;
  b.upper = b.mean + half;
  return b;
}

StudyResult gof_vs_n_study(const StudyOptions& options) {
  if (options.sizes.empty()) throw InvalidInput("study needs at least one sample size");
  for (std::size_t k = 0; k < options.sizes.size(); ++k) {
    if (options.sizes[k] < 10) throw InvalidInput("study sample sizes must be >= 10");
    if (k && options.sizes[k] <= options.sizes[k - 1]) {
      throw InvalidInput("study sample sizes must be strictly increasing");
    }
  }
  if (options.p_realizations == 0 || options.ks_realizations == 0) {
    throw InvalidInput("study needs at least one realization per panel");
  }
  options.spec.validate();

  StudyResult result{options, {}};
  const std::size_t realizations = std::max(options.p_realizations, options.ks_realizations);
  for (std::size_t n : options.sizes) {
    const std::uint64_t table_seed = derive_seed(options.seed, {n, kNullTableStream});
    const auto table = KsNullDistribution::cached(n, options.replicates, table_seed);

    std::vector<double> composite_ks(realizations), null_ks(realizations);
    parallel_for(realizations, [&](std::size_t r) {
      const std::uint64_t data_seed = derive_seed(options.seed, {n, r});
      const auto raw = options.normal_control ? sample_normal_control(5, n, data_seed)
                                              : sample_arb(options.spec, n, data_seed);
      std::vector<StandardizedMeasure> standardized;
      standardized.reserve(raw.size());
      for (const auto& m : raw) standardized.push_back(standardize(m));
      composite_ks[r] = ks_statistic(combine_set(standardized, "composite").values);

      Rng rng(derive_seed(options.seed, {n, r, kNullSampleStream}));
      std::vector<double> null_sample(n);
      for (double& x : null_sample) x = rng.normal();
      null_ks[r] = ks_statistic(null_sample);
    });

    std::vector<double> p_values(options.p_realizations);
    for (std::size_t r = 0; r < options.p_realizations; ++r) {
      p_values[r] = table->p_value(composite_ks[r]);
    }
    composite_ks.resize(options.ks_realizations);
    null_ks.resize(options.ks_realizations);

    result.rows.push_back(
        {n, confidence_band(p_values), confidence_band(composite_ks), confidence_band(null_ks)});
  }
  return result;
}

double max_error_estimate(const StudyResult& study, std::size_t n) {
  for (const auto& row : study.rows) {
    if (row.n == n) return row.composite_ks.upper;
  }
  throw InvalidInput("sample size " + std::to_string(n) + " is not part of the study");
}

std::string study_to_csv(const StudyResult& study) {
  std::string out =
      "n,p_mean,p_lower,p_upper,p_count,ks_mean,ks_lower,ks_upper,null_ks_mean,null_ks_lower,"
      "null_ks_upper,ks_count\n";
  for (const auto& r : study.rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", r.n, r.p_value.mean,
                       r.p_value.lower, r.p_value.upper, r.p_value.count, r.composite_ks.mean,
                       r.composite_ks.lower, r.composite_ks.upper, r.null_ks.mean,
                       r.null_ks.lower, r.null_ks.upper, r.composite_ks.count);
  }
  return out;
}

nlohmann::json study_to_json(const StudyResult& study) {
  const auto& o = study.options;
  nlohmann::json spec = {
      {"uniform", {{"low", o.spec.uniform_low}, {"high", o.spec.uniform_high}}},
      {"normal", {{"mean", o.spec.normal_mean}, {"sd", o.spec.normal_sd}}},
      {"log_normal", {{"mu", o.spec.lognormal_mu}, {"sigma", o.spec.lognormal_sigma}}},
      {"exponential",
       {{"value", o.spec.exponential},
        {"parameter",
         o.spec.exponential_param == ArbMeasureSpec::ExponentialParam::Mean ? "mean" : "rate"}}},
      {"pareto", {{"x_min", o.spec.pareto_min}, {"alpha", o.spec.pareto_alpha}}},
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : study.rows) {
    rows.push_back({{"n", r.n},
                    {"p_value", band_json(r.p_value)},
                    {"composite_ks", band_json(r.composite_ks)},
                    {"null_ks", band_json(r.null_ks)}});
  }
  return {{"schema_version", 1},
          {"seed", o.seed},
          {"replicates", o.replicates},
          {"p_realizations", o.p_realizations},
          {"ks_realizations", o.ks_realizations},
          {"normal_control", o.normal_control},
          {"distributions", spec},
          {"rows", rows}};
}

}  // namespace compcent
