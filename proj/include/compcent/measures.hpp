#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "compcent/graph.hpp"

namespace compcent {

enum class Direction { In, Out };

/// One raw node measure, aligned with the node order of its source graph.
struct MeasureVector {
  std::string name;
  std::vector<double> values;
  bool bigger_is_better = true;
};

MeasureVector degree(const WeightedDigraph& g, Direction dir);
MeasureVector strength(const WeightedDigraph& g, Direction dir);

/// Mean hop distance to (Out) or from (In) every other node.
/// Throws NotConnected if some pair is unreachable.
MeasureVector aspl(const WeightedDigraph& g, Direction dir);

/// Maximum flow from s to t with capacities equal to edge weights.
double max_flow(const WeightedDigraph& g, NodeIndex s, NodeIndex t);

/// All ordered-pair maximum flows; entry [s * N + t], zero on the diagonal.
std::vector<double> max_flow_matrix(const WeightedDigraph& g);

/// Mean max-flow into (In) or out of (Out) each node over all counterparts.
MeasureVector maxflow_measure(const WeightedDigraph& g, Direction dir);

/// Perron vector of the underlying simple graph's adjacency, unit norm.
MeasureVector eigenvector_centrality(const WeightedDigraph& g);

/// Measure codes in their fixed order.
inline constexpr std::array<std::string_view, 8> kStandardMeasureCodes = {
    "IN-LO-QL", "IN-LO-QN", "IN-SH-QL", "IN-SH-QN",
    "OUT-LO-QL", "OUT-LO-QN", "OUT-SH-QL", "OUT-SH-QN"};

inline constexpr std::string_view kEigenvectorCode = "EVC";

/// The eight direction/range/texture measures:
/// ASPL, max-flow, degree and strength, each incoming then outgoing.
std::vector<MeasureVector> standard_measure_set(const WeightedDigraph& g);

}  // namespace compcent
