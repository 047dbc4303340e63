#include "compcent/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include <Eigen/Dense>

#include "bfs.hpp"
#include "compcent/errors.hpp"
#include "compcent/parallel.hpp"

namespace compcent {
namespace {

std::uint64_t pair_key(NodeIndex i, NodeIndex j) {
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool by_source,
               std::vector<std::size_t>& offsets, std::vector<std::size_t>& index) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(by_source ? e.source : e.target) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  index.assign(edges.size(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const NodeIndex key = by_source ? edges[k].source : edges[k].target;
    index[cursor[key]++] = k;
  }
}

}  // namespace

WeightedDigraph::WeightedDigraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  if (n > 0xffffffffULL) throw InvalidInput("graph too large");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw InvalidInput("empty node label");
      if (!seen.insert(l).second) throw InvalidInput("duplicate node label '" + l + "'");
    }
  }
  std::unordered_set<std::uint64_t> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.source >= n || e.target >= n) throw InvalidInput("edge endpoint out of range");
    if (e.source == e.target) throw InvalidInput("self-loop on node '" + labels_[e.source] + "'");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw InvalidInput("non-positive weight on edge '" + labels_[e.source] + "' -> '" +
                         labels_[e.target] + "'");
    }
    if (!pairs.insert(pair_key(e.source, e.target)).second) {
      throw InvalidInput("duplicate edge '" + labels_[e.source] + "' -> '" +
                         labels_[e.target] + "'");
    }
  }
  build_csr(n, edges_, true, out_offsets_, out_index_);
  build_csr(n, edges_, false, in_offsets_, in_index_);
}

std::optional<NodeIndex> WeightedDigraph::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeIndex>(it - labels_.begin());
}

std::span<const std::size_t> WeightedDigraph::out_edges(NodeIndex i) const {
  return {out_index_.data() + out_offsets_.at(i), out_offsets_.at(i + 1) - out_offsets_[i]};
}

std::span<const std::size_t> WeightedDigraph::in_edges(NodeIndex i) const {
  return {in_index_.data() + in_offsets_.at(i), in_offsets_.at(i + 1) - in_offsets_[i]};
}

double WeightedDigraph::weight(NodeIndex i, NodeIndex j) const {
  for (std::size_t e : out_edges(i)) {
    if (edges_[e].target == j) return edges_[e].weight;
  }
  return 0.0;
}

double WeightedDigraph::total_weight() const noexcept {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.weight;
  return total;
}

WeightedDigraph WeightedDigraph::transpose() const {
  std::vector<Edge> reversed;
  reversed.reserve(edges_.size());
  for (const Edge& e : edges_) reversed.push_back({e.target, e.source, e.weight});
  return WeightedDigraph(labels_, std::move(reversed));
}

WeightedDigraph WeightedDigraph::induced(std::span<const NodeIndex> nodes) const {
  std::vector<std::size_t> remap(labels_.size(), detail::kUnreachable);
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    remap.at(nodes[k]) = k;
    labels.push_back(labels_[nodes[k]]);
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (remap[e.source] != detail::kUnreachable && remap[e.target] != detail::kUnreachable) {
      kept.push_back({remap[e.source], remap[e.target], e.weight});
    }
  }
  return WeightedDigraph(std::move(labels), std::move(kept));
}

WeightedDigraph build_graph(std::span<const LabeledEdge> edges) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeIndex> index;
  auto intern = [&](const std::string& label) {
    if (label.empty()) throw InvalidInput("empty node label");
    auto [it, inserted] = index.try_emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    const NodeIndex s = intern(e.source);
    const NodeIndex t = intern(e.target);
    out.push_back({s, t, e.weight});
  }
  return WeightedDigraph(std::move(labels), std::move(out));
}

WeightedDigraph threshold_graph(const WeightedDigraph& g, double threshold) {
  if (!(threshold > 0.0)) throw InvalidInput("edge threshold must be positive");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.weight >= threshold) kept.push_back(e);
  }
  return WeightedDigraph(g.labels(), std::move(kept));
}

std::vector<std::size_t> strongly_connected_components(const WeightedDigraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.node_count();
  constexpr std::size_t kUnvisited = detail::kUnreachable;
  std::vector<std::size_t> order(n, kUnvisited), low(n, 0), raw(n, kUnvisited);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeIndex> stack;
  struct Frame {
    NodeIndex node;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::size_t counter = 0, components = 0;

  for (NodeIndex root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    call.push_back({root, 0});
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto out = g.out_edges(f.node);
      if (f.next < out.size()) {
        const NodeIndex v = g.edges()[out[f.next++]].target;
        if (order[v] == kUnvisited) {
          order[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = 1;
          call.push_back({v, 0});
        } else if (on_stack[v]) {
          low[f.node] = std::min(low[f.node], order[v]);
        }
        continue;
      }
      const NodeIndex u = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[u]);
      if (low[u] == order[u]) {
        NodeIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw[w] = components;
        } while (w != u);
        ++components;
      }
    }
  }

  // Relabel so that ids follow the smallest member index.
  std::vector<std::size_t> relabel(components, kUnvisited);
  std::size_t next_id = 0;
  std::vector<std::size_t> comp(n);
  for (NodeIndex i = 0; i < n; ++i) {
    if (relabel[raw[i]] == kUnvisited) relabel[raw[i]] = next_id++;
    comp[i] = relabel[raw[i]];
  }
  return comp;
}

bool is_strongly_connected(const WeightedDigraph& g) {
  if (g.node_count() == 0) return false;
  const auto comp = strongly_connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

WeightedDigraph largest_scc(const WeightedDigraph& g) {
  if (g.node_count() == 0) throw InvalidInput("empty graph");
  const auto comp = strongly_connected_components(g);
  const std::size_t count = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::size_t> sizes(count, 0);
  for (std::size_t c : comp) ++sizes[c];
  // Ids are ordered by smallest member, so the first maximum wins ties.
  const std::size_t best =
      static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  if (sizes[best] < 2) {
    throw InvalidInput("largest strongly connected component has fewer than 2 nodes");
  }
  std::vector<NodeIndex> members;
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    if (comp[i] == best) members.push_back(i);
  }
  return g.induced(members);
}

double graph_asymmetry(const WeightedDigraph& g) {
  if (g.edge_count() == 0) throw InvalidInput("graph asymmetry of an edgeless graph");
  double diff2 = 0.0, norm2 = 0.0;
  for (const Edge& e : g.edges()) {
    const double back = g.weight(e.target, e.source);
    norm2 += e.weight * e.weight;
    diff2 += (e.weight - back) * (e.weight - back);
    if (back == 0.0) diff2 += e.weight * e.weight;  // the (target, source) entry
  }
  return std::sqrt(diff2) / (2.0 * std::sqrt(norm2));
}

double edge_density(const WeightedDigraph& g) {
  const double n = static_cast<double>(g.node_count());
  if (g.node_count() < 2) throw InvalidInput("edge density needs at least 2 nodes");
  return static_cast<double>(g.edge_count()) / (n * n - n);
}

std::size_t diameter(const WeightedDigraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw InvalidInput("diameter of an empty graph");
  std::vector<std::size_t> ecc(n, 0);
  parallel_for(n, [&](std::size_t s) {
    const auto dist = detail::hop_distances(g, s);
    std::size_t m = 0;
    for (std::size_t d : dist) {
      if (d == detail::kUnreachable) {
        m = detail::kUnreachable;
        break;
      }
      m = std::max(m, d);
    }
    ecc[s] = m;
  });
  const std::size_t d = *std::max_element(ecc.begin(), ecc.end());
  if (d == detail::kUnreachable) throw NotConnected("diameter: graph is not strongly connected");
  return d;
}

Clustering clustering(const WeightedDigraph& g) {
  const auto nb = detail::undirected_neighbours(g);
  Clustering out;
  out.per_node.assign(g.node_count(), 0.0);
  for (NodeIndex i = 0; i < nb.size(); ++i) {
    const auto& list = nb[i];
    const std::size_t k = list.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (std::binary_search(nb[list[a]].begin(), nb[list[a]].end(), list[b])) ++links;
      }
    }
    out.per_node[i] = static_cast<double>(links) / (static_cast<double>(k * (k - 1)) / 2.0);
  }
  if (!out.per_node.empty()) {
    out.mean = std::accumulate(out.per_node.begin(), out.per_node.end(), 0.0) /
               static_cast<double>(out.per_node.size());
  }
  return out;
}

double algebraic_connectivity(const WeightedDigraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw InvalidInput("algebraic connectivity needs at least 2 nodes");
  if (!detail::undirected_connected(detail::undirected_neighbours(g))) {
    throw NotConnected("algebraic connectivity: graph is disconnected");
  }
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (const Edge& e : g.edges()) {
    const auto s = static_cast<Eigen::Index>(e.source);
    const auto t = static_cast<Eigen::Index>(e.target);
    sym(s, t) += 0.5 * e.weight;
    sym(t, s) += 0.5 * e.weight;
  }
  const Eigen::VectorXd strength = sym.rowwise().sum();
  const Eigen::VectorXd inv_sqrt = strength.array().rsqrt();
  Eigen::MatrixXd lap = -(inv_sqrt.asDiagonal() * sym * inv_sqrt.asDiagonal());
  lap.diagonal().array() += 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigen-decomposition failed");
  // Ascending; exactly one zero eigenvalue for a connected graph.
  return solver.eigenvalues()(1);
}

std::optional<double> assortativity(const WeightedDigraph& g) {
  if (g.edge_count() < 2) throw InvalidInput("assortativity needs at least 2 edges");
  std::vector<double> strength(g.node_count(), 0.0);
  for (const Edge& e : g.edges()) {
    strength[e.source] += e.weight;
    strength[e.target] += e.weight;
  }
  const double m = static_cast<double>(g.edge_count());
  double mx = 0.0, my = 0.0;
  for (const Edge& e : g.edges()) {
    mx += strength[e.source];
    my += strength[e.target];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const Edge& e : g.edges()) {
    const double dx = strength[e.source] - mx;
    const double dy = strength[e.target] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  constexpr double kRelTol = 1e-24;
  if (sxx <= kRelTol * mx * mx * m || syy <= kRelTol * my * my * m) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double coverage(const WeightedDigraph& full, const WeightedDigraph& reduced) {
  std::map<std::pair<std::string, std::string>, double> weights;
  for (const Edge& e : full.edges()) {
    weights.emplace(std::pair{full.label(e.source), full.label(e.target)}, e.weight);
  }
  for (const Edge& e : reduced.edges()) {
    const auto it = weights.find({reduced.label(e.source), reduced.label(e.target)});
    if (it == weights.end() || it->second != e.weight) {
      throw InvalidInput("coverage: reduced graph edge '" + reduced.label(e.source) + "' -> '" +
                         reduced.label(e.target) + "' is not an edge of the full graph");
    }
  }
  const double total = full.total_weight();
  if (total <= 0.0) throw InvalidInput("coverage: full graph has no edges");
  return reduced.total_weight() / total;
}

}  // namespace compcent
