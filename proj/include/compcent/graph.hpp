#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace compcent {

using NodeIndex = std::size_t;

struct LabeledEdge {
  std::string source;
  std::string target;
  double weight = 0.0;
};

struct Edge {
  NodeIndex source = 0;
  NodeIndex target = 0;
  double weight = 0.0;
};

/// Node-labelled directed graph with strictly positive weights and no
/// self-loops or parallel edges. Immutable after construction.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  /// Validates and builds. Throws InvalidInput on self-loops, non-positive or
  /// non-finite weights, duplicate labels, duplicate (source, target) pairs or
  /// out-of-range endpoints.
  WeightedDigraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeIndex i) const { return labels_.at(i); }
  std::optional<NodeIndex> find(const std::string& label) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Indices into edges() of the edges leaving / entering node i.
  std::span<const std::size_t> out_edges(NodeIndex i) const;
  std::span<const std::size_t> in_edges(NodeIndex i) const;

  /// Weight of edge i->j, or 0 when absent.
  double weight(NodeIndex i, NodeIndex j) const;

  double total_weight() const noexcept;

  /// Same nodes, every edge reversed.
  WeightedDigraph transpose() const;

  /// Induced subgraph on the given nodes, kept in the given order.
  WeightedDigraph induced(std::span<const NodeIndex> nodes) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_, out_index_;
  std::vector<std::size_t> in_offsets_, in_index_;
};

/// Deduplicates node labels in first-appearance order.
WeightedDigraph build_graph(std::span<const LabeledEdge> edges);

/// Keeps edges with weight >= threshold. All nodes are retained.
WeightedDigraph threshold_graph(const WeightedDigraph& g, double threshold);

/// Strongly connected components (Tarjan). Returns the component id of each
/// node; ids are assigned in order of the smallest node index they contain.
std::vector<std::size_t> strongly_connected_components(const WeightedDigraph& g);

bool is_strongly_connected(const WeightedDigraph& g);

/// Induced subgraph on the largest SCC. Ties go to the component containing
/// the smallest node index. Throws InvalidInput if it has fewer than 2 nodes.
WeightedDigraph largest_scc(const WeightedDigraph& g);

/// ||W - W^T||_F / (2 ||W||_F).
double graph_asymmetry(const WeightedDigraph& g);

double edge_density(const WeightedDigraph& g);

/// Maximum unweighted hop distance over ordered node pairs.
std::size_t diameter(const WeightedDigraph& g);

struct Clustering {
  std::vector<double> per_node;
  double mean = 0.0;
};

/// Local clustering of the underlying simple (undirected, unweighted) graph.
/// Nodes with fewer than two neighbours score 0.
Clustering clustering(const WeightedDigraph& g);

/// Smallest non-zero eigenvalue of D^{-1/2}(D - W')D^{-1/2} with
/// W' = (W + W^T) / 2 and D the row sums of W'.
double algebraic_connectivity(const WeightedDigraph& g);

/// Pearson correlation over directed edges between the total strengths of
/// source and target. std::nullopt when either endpoint series is constant.
std::optional<double> assortativity(const WeightedDigraph& g);

/// Total weight of `reduced` over total weight of `full`. Every labelled edge
/// of `reduced` must exist in `full` with the same weight.
double coverage(const WeightedDigraph& full, const WeightedDigraph& reduced);

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t diameter = 0;
  double mean_aspl = 0.0;
  double mean_maxflow = 0.0;
  double mean_degree = 0.0;    // in + out
  double mean_strength = 0.0;  // in + out
  double asymmetry = 0.0;
  double edge_density = 0.0;
  double mean_clustering = 0.0;
  double algebraic_connectivity = 0.0;
  std::optional<double> assortativity;
  double coverage = 1.0;
};

/// Whole-graph statistics of a strongly connected graph `g` obtained from `full`.
GraphSummary summarize(const WeightedDigraph& full, const WeightedDigraph& g);

struct MeasureVector;

/// As above, reusing the OUT-LO-QL / OUT-LO-QN vectors of an already
/// computed standard measure set.
GraphSummary summarize(const WeightedDigraph& full, const WeightedDigraph& g,
                       std::span<const MeasureVector> standard_set);

}  // namespace compcent
