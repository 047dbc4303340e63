#include <numeric>
#include <string_view>

#include "compcent/errors.hpp"
#include "compcent/graph.hpp"
#include "compcent/measures.hpp"

namespace compcent {
namespace {

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

GraphSummary summarize(const WeightedDigraph& full, const WeightedDigraph& g) {
  const std::vector<MeasureVector> path_measures = {aspl(g, Direction::Out),
                                                    maxflow_measure(g, Direction::Out)};
  return summarize(full, g, path_measures);
}

GraphSummary summarize(const WeightedDigraph& full, const WeightedDigraph& g,
                       std::span<const MeasureVector> standard_set) {
  auto find = [&](std::string_view code) -> const std::vector<double>& {
    for (const auto& m : standard_set) {
      if (m.name == code) return m.values;
    }
    throw InvalidInput("summary: measure set lacks " + std::string(code));
  };
  GraphSummary s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  s.diameter = diameter(g);
  s.mean_aspl = mean(find("OUT-LO-QL"));
  s.mean_maxflow = mean(find("OUT-LO-QN"));
  s.mean_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
  s.mean_strength = 2.0 * g.total_weight() / static_cast<double>(g.node_count());
  s.asymmetry = graph_asymmetry(g);
  s.edge_density = edge_density(g);
  s.mean_clustering = clustering(g).mean;
  s.algebraic_connectivity = algebraic_connectivity(g);
  s.assortativity = g.edge_count() >= 2 ? assortativity(g) : std::nullopt;
  s.coverage = coverage(full, g);
  return s;
}

}  // namespace compcent
