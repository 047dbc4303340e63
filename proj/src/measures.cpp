#include "compcent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "bfs.hpp"
#include "compcent/errors.hpp"
#include "compcent/parallel.hpp"

namespace compcent {
namespace {

std::string code(Direction dir, std::string_view rest) {
  return std::string(dir == Direction::In ? "IN-" : "OUT-") + std::string(rest);
}

void require_nodes(const WeightedDigraph& g) {
  if (g.node_count() < 2) throw InvalidInput("node measures need at least 2 nodes");
}

/// Dinic max-flow over a residual network built once per graph; capacities
/// are reset for each (s, t) query.
class FlowNetwork {
 public:
  explicit FlowNetwork(const WeightedDigraph& g) : n_(g.node_count()), head_(n_ + 1, 0) {
    for (const Edge& e : g.edges()) {
      ++head_[e.source + 1];
      ++head_[e.target + 1];
    }
    std::partial_sum(head_.begin(), head_.end(), head_.begin());
    const std::size_t arcs = head_.back();
    to_.resize(arcs);
    rev_.resize(arcs);
    base_.resize(arcs);
    std::vector<std::size_t> cursor(head_.begin(), head_.end() - 1);
    double max_cap = 0.0;
    for (const Edge& e : g.edges()) {
      const std::size_t a = cursor[e.source]++;
      const std::size_t b = cursor[e.target]++;
      to_[a] = e.target;
      to_[b] = e.source;
      rev_[a] = b;
      rev_[b] = a;
      base_[a] = e.weight;
      base_[b] = 0.0;
      max_cap = std::max(max_cap, e.weight);
    }
    eps_ = max_cap * 1e-13;
    cap_.resize(arcs);
    level_.resize(n_);
    iter_.resize(n_);
    queue_.reserve(n_);
  }

  // The value is reported as a cut capacity rather than the accumulated
  // flow. Both the source-closest and the sink-closest minimum cut depend
  // only on the graph, and reversing all edges swaps them, so taking the
  // smaller of the two sorted sums makes flow(g, s, t) and flow(g^T, t, s)
  // bit-identical.
  double run(NodeIndex s, NodeIndex t) {
    std::copy(base_.begin(), base_.end(), cap_.begin());
    while (bfs(s, t)) {
      std::copy(head_.begin(), head_.end() - 1, iter_.begin());
      while (dfs(s, t, std::numeric_limits<double>::infinity()) > 0.0) {
      }
    }
    // level_ now marks the residual-reachable set of s.
    std::vector<char> source_side(n_), sink_side(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) source_side[v] = level_[v] >= 0;
    queue_.clear();
    sink_side[t] = 1;
    queue_.push_back(t);
    for (std::size_t h = 0; h < queue_.size(); ++h) {
      const NodeIndex v = queue_[h];
      for (std::size_t b = head_[v]; b < head_[v + 1]; ++b) {
        const NodeIndex u = to_[b];
        if (!sink_side[u] && cap_[rev_[b]] > eps_) {
          sink_side[u] = 1;
          queue_.push_back(u);
        }
      }
    }
    const double near_source = cut_capacity([&](NodeIndex v) { return source_side[v] != 0; });
    const double near_sink = cut_capacity([&](NodeIndex v) { return sink_side[v] == 0; });
    return std::min(near_source, near_sink);
  }

 private:
  template <typename InSource>
  double cut_capacity(InSource in_source) {
    cut_.clear();
    for (std::size_t u = 0; u < n_; ++u) {
      if (!in_source(u)) continue;
      for (std::size_t a = head_[u]; a < head_[u + 1]; ++a)
        if (base_[a] > 0.0 && !in_source(to_[a])) cut_.push_back(base_[a]);
    }
    std::sort(cut_.begin(), cut_.end());
    double total = 0.0;
    for (double w : cut_) total += w;
    return total;
  }

  bool bfs(NodeIndex s, NodeIndex t) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    level_[s] = 0;
    queue_.push_back(s);
    for (std::size_t h = 0; h < queue_.size(); ++h) {
      const NodeIndex u = queue_[h];
      for (std::size_t a = head_[u]; a < head_[u + 1]; ++a) {
        if (cap_[a] > eps_ && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[u] + 1;
          queue_.push_back(to_[a]);
        }
      }
    }
    return level_[t] >= 0;
  }

  double dfs(NodeIndex u, NodeIndex t, double limit) {
    if (u == t) return limit;
    for (std::size_t& a = iter_[u]; a < head_[u + 1]; ++a) {
      const NodeIndex v = to_[a];
      if (cap_[a] <= eps_ || level_[v] != level_[u] + 1) continue;
      const double pushed = dfs(v, t, std::min(limit, cap_[a]));
      if (pushed > 0.0) {
        cap_[a] -= pushed;
        cap_[rev_[a]] += pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  std::size_t n_;
  std::vector<std::size_t> head_, to_, rev_;
  std::vector<double> base_, cap_, cut_;
  std::vector<long> level_;
  std::vector<std::size_t> iter_;
  std::vector<NodeIndex> queue_;
  double eps_ = 0.0;
};

MeasureVector flow_measure_from_matrix(const std::vector<double>& flows, std::size_t n,
                                       Direction dir) {
  MeasureVector m{code(dir, "LO-QN"), std::vector<double>(n, 0.0), true};
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      sum += dir == Direction::Out ? flows[i * n + j] : flows[j * n + i];
    }
    m.values[i] = sum / static_cast<double>(n - 1);
  }
  return m;
}

}  // namespace

MeasureVector degree(const WeightedDigraph& g, Direction dir) {
  require_nodes(g);
  MeasureVector m{code(dir, "SH-QL"), std::vector<double>(g.node_count()), true};
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    const auto incident = dir == Direction::In ? g.in_edges(i) : g.out_edges(i);
    m.values[i] = static_cast<double>(incident.size());
  }
  return m;
}

MeasureVector strength(const WeightedDigraph& g, Direction dir) {
  require_nodes(g);
  MeasureVector m{code(dir, "SH-QN"), std::vector<double>(g.node_count(), 0.0), true};
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    const auto incident = dir == Direction::In ? g.in_edges(i) : g.out_edges(i);
    for (std::size_t e : incident) m.values[i] += g.edges()[e].weight;
  }
  return m;
}

MeasureVector aspl(const WeightedDigraph& g, Direction dir) {
  require_nodes(g);
  const std::size_t n = g.node_count();
  MeasureVector m{code(dir, "LO-QL"), std::vector<double>(n, 0.0), false};
  std::vector<char> ok(n, 1);
  parallel_for(n, [&](std::size_t i) {
    const auto dist = detail::hop_distances(g, i, dir == Direction::In);
    std::size_t total = 0;
    for (std::size_t d : dist) {
      if (d == detail::kUnreachable) {
        ok[i] = 0;
        return;
      }
      total += d;
    }
    m.values[i] = static_cast<double>(total) / static_cast<double>(n - 1);
  });
  if (std::find(ok.begin(), ok.end(), 0) != ok.end()) {
    throw NotConnected("ASPL: graph is not strongly connected");
  }
  return m;
}

double max_flow(const WeightedDigraph& g, NodeIndex s, NodeIndex t) {
  if (s >= g.node_count() || t >= g.node_count()) throw InvalidInput("max_flow: node out of range");
  if (s == t) throw InvalidInput("max_flow: source equals sink");
  FlowNetwork net(g);
  return net.run(s, t);
}

std::vector<double> max_flow_matrix(const WeightedDigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> flows(n * n, 0.0);
  parallel_for(n, [&](std::size_t s) {
    FlowNetwork net(g);
    for (std::size_t t = 0; t < n; ++t) {
      if (t != s) flows[s * n + t] = net.run(s, t);
    }
  });
  return flows;
}

MeasureVector maxflow_measure(const WeightedDigraph& g, Direction dir) {
  require_nodes(g);
  if (!is_strongly_connected(g)) throw NotConnected("max-flow measure: graph is not strongly connected");
  return flow_measure_from_matrix(max_flow_matrix(g), g.node_count(), dir);
}

MeasureVector eigenvector_centrality(const WeightedDigraph& g) {
  require_nodes(g);
  const auto nb = detail::undirected_neighbours(g);
  if (!detail::undirected_connected(nb)) {
    throw NotConnected("eigenvector centrality: underlying graph is disconnected");
  }
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (NodeIndex j : nb[i]) adj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj);
  if (solver.info() != Eigen::Success) throw Error("eigen-decomposition failed");
  Eigen::VectorXd v = solver.eigenvectors().col(n - 1);
  if (v.sum() < 0.0) v = -v;
  v = v.cwiseAbs();
  v /= v.norm();
  MeasureVector m{std::string(kEigenvectorCode), std::vector<double>(v.data(), v.data() + n), true};
  return m;
}

std::vector<MeasureVector> standard_measure_set(const WeightedDigraph& g) {
  require_nodes(g);
  if (!is_strongly_connected(g)) throw NotConnected("measure set: graph is not strongly connected");
  const auto flows = max_flow_matrix(g);
  const std::size_t n = g.node_count();
  std::vector<MeasureVector> set;
  set.reserve(8);
  for (Direction dir : {Direction::In, Direction::Out}) {
    set.push_back(aspl(g, dir));
    set.push_back(flow_measure_from_matrix(flows, n, dir));
    set.push_back(degree(g, dir));
    set.push_back(strength(g, dir));
  }
  return set;
}

}  // namespace compcent
