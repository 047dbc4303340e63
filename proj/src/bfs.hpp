#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "compcent/graph.hpp"

namespace compcent::detail {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Hop distances from `source` following edge direction (or against it when
/// `reverse` is set). Unreached nodes hold kUnreachable.
inline std::vector<std::size_t> hop_distances(const WeightedDigraph& g, NodeIndex source,
                                              bool reverse = false) {
  std::vector<std::size_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeIndex> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeIndex u = queue[head];
    const auto incident = reverse ? g.in_edges(u) : g.out_edges(u);
    for (std::size_t e : incident) {
      const Edge& edge = g.edges()[e];
      const NodeIndex v = reverse ? edge.source : edge.target;
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

/// Sorted neighbour lists of the underlying simple graph.
inline std::vector<std::vector<NodeIndex>> undirected_neighbours(const WeightedDigraph& g) {
  std::vector<std::vector<NodeIndex>> nb(g.node_count());
  for (const Edge& e : g.edges()) {
    nb[e.source].push_back(e.target);
    nb[e.target].push_back(e.source);
  }
  for (auto& list : nb) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return nb;
}

inline bool undirected_connected(const std::vector<std::vector<NodeIndex>>& nb) {
  if (nb.empty()) return true;
  std::vector<char> seen(nb.size(), 0);
  std::vector<NodeIndex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeIndex u = stack.back();
    stack.pop_back();
    for (NodeIndex v : nb[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == nb.size();
}

}  // namespace compcent::detail
