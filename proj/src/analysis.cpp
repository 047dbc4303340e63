#include "compcent/analysis.hpp"

#include <algorithm>

#include "compcent/errors.hpp"

namespace compcent {
namespace {

std::vector<StandardizedMeasure> standardize_all(const std::vector<MeasureVector>& raw) {
  std::vector<StandardizedMeasure> out;
  out.reserve(raw.size());
  for (const auto& m : raw) out.push_back(standardize(m));
  return out;
}

}  // namespace

MeasureSet parse_measure_set(const std::string& id) {
  if (id == "sf") return MeasureSet::Standard;
  if (id == "alt") return MeasureSet::Alternative;
  throw InvalidInput("unknown measure set '" + id + "' (expected sf or alt)");
}

std::string to_string(MeasureSet s) { return s == MeasureSet::Standard ? "sf" : "alt"; }

const SchemeNodeScores& AnalysisReport::node_scores(const std::string& name) const {
  for (const auto& n : scheme_nodes) {
    if (n.name == name) return n;
  }
  throw InvalidInput("report has no scheme node '" + name + "'");
}

AnalysisReport analyze_measures(const std::vector<std::string>& nodes,
                                const std::vector<MeasureVector>& raw,
                                const AnalysisOptions& options,
                                std::optional<GraphSummary> summary,
                                const std::optional<MeasureVector>& alternative) {
  for (const auto& m : raw) {
    if (m.values.size() != nodes.size()) {
      throw InvalidInput("measure '" + m.name + "' does not match the node count");
    }
  }

  AnalysisReport report;
  report.tool_version = COMPCENT_VERSION;
  report.seed = options.seed;
  report.replicates = options.replicates;
  report.input_name = options.input_name;
  report.year = options.year;
  report.threshold = options.threshold;
  report.measure_set = options.measure_set;
  report.summary = std::move(summary);
  report.nodes = nodes;

  InheritanceScheme scheme = options.scheme;
  std::vector<MeasureVector> g1_raw = raw;
  std::vector<StandardizedMeasure> g1 = standardize_all(g1_raw);

  if (options.measure_set == MeasureSet::Alternative) {
    if (!alternative) throw InvalidInput("alternative measure set needs an alternative measure");
    std::size_t worst = 0;
    double worst_p = 2.0;
    for (std::size_t k = 0; k < g1.size(); ++k) {
      const double p = ks_p_value(g1[k].values, options.replicates, options.seed).p_value;
      if (p < worst_p) {
        worst_p = p;
        worst = k;
      }
    }
    report.replaced_measure = g1_raw[worst].name;
    scheme.rename_leaf(g1_raw[worst].name, alternative->name);
    g1_raw[worst] = *alternative;
    g1[worst] = standardize(*alternative);
  }

  for (const auto& m : g1) report.transforms.push_back(*m.transform);
  report.raw_measures = std::move(g1_raw);

  const GenerationScores scores = run_scheme(scheme, g1);
  report.scheme_id = scheme.id().empty() ? "custom" : scheme.id();
  report.scheme_tree = scheme.to_json();
  for (std::size_t i : scheme.post_order()) {
    const auto& e = scores.entries[i];
    report.scheme_nodes.push_back(
        {e.name, e.generation, e.normalizer, e.measure.values, e.display_height});
  }

  const auto& root = report.root();
  report.gof.push_back({root.name, ks_p_value(root.values, options.replicates, options.seed)});
  report.gof.push_back({root.name, anderson_darling(root.values)});
  for (const auto& node : report.scheme_nodes) {
    if (&node == &root) continue;
    report.gof.push_back({node.name, ks_p_value(node.values, options.replicates, options.seed)});
  }
  return report;
}

AnalysisReport analyze(const WeightedDigraph& full, const AnalysisOptions& options) {
  const WeightedDigraph reduced = largest_scc(threshold_graph(full, options.threshold));
  const auto measures = standard_measure_set(reduced);

  GraphSummary summary = summarize(full, reduced, measures);
  std::optional<MeasureVector> alternative;
  if (options.measure_set == MeasureSet::Alternative) {
    alternative = eigenvector_centrality(reduced);
  }
  return analyze_measures(reduced.labels(), measures, options, summary, alternative);
}

}  // namespace compcent
