#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "compcent/composite.hpp"
#include "compcent/gof.hpp"
#include "compcent/graph.hpp"
#include "compcent/measures.hpp"
#include "compcent/standardize.hpp"

namespace compcent {

enum class MeasureSet {
  Standard,     // the eight direction/range/texture measures
  Alternative,  // lowest-p measure swapped for eigenvector centrality
};

MeasureSet parse_measure_set(const std::string& id);
std::string to_string(MeasureSet s);

struct AnalysisOptions {
  std::string input_name;
  std::optional<int> year;
  double threshold = 0.0;
  InheritanceScheme scheme = InheritanceScheme::builtin("drt");
  MeasureSet measure_set = MeasureSet::Standard;
  std::uint64_t seed = 0;
  std::size_t replicates = kDefaultReplicates;
};

struct NamedGoF {
  std::string measure;
  GoFReport report;
};

struct SchemeNodeScores {
  std::string name;
  int generation = 1;
  double normalizer = 1.0;
  std::vector<double> values;
  std::vector<double> display_height;
};

struct AnalysisReport {
  std::string tool_version;
  std::uint64_t seed = 0;
  std::size_t replicates = 0;

  std::string input_name;
  std::optional<int> year;
  double threshold = 0.0;
  MeasureSet measure_set = MeasureSet::Standard;
  std::optional<std::string> replaced_measure;

  std::optional<GraphSummary> summary;
  std::vector<std::string> nodes;
  std::vector<MeasureVector> raw_measures;  // first generation, scheme leaf names
  std::vector<TransformParams> transforms;  // aligned with raw_measures

  std::string scheme_id;
  nlohmann::json scheme_tree;
  std::vector<SchemeNodeScores> scheme_nodes;  // post-order, root last
  std::vector<NamedGoF> gof;

  const SchemeNodeScores& root() const { return scheme_nodes.back(); }
  const SchemeNodeScores& node_scores(const std::string& name) const;
};

/// Threshold, largest SCC, measure set, standardisation, scheme, GoF tests.
AnalysisReport analyze(const WeightedDigraph& full, const AnalysisOptions& options);

/// Everything after graph preprocessing, on caller-supplied raw measures
/// whose names match the scheme leaves. `summary` is copied into the report.
AnalysisReport analyze_measures(const std::vector<std::string>& nodes,
                                const std::vector<MeasureVector>& raw,
                                const AnalysisOptions& options,
                                std::optional<GraphSummary> summary = std::nullopt,
                                const std::optional<MeasureVector>& alternative = std::nullopt);

nlohmann::json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& j);

/// Canonical text form (two-space indent, trailing newline).
std::string dump_json(const nlohmann::json& j);

}  // namespace compcent
