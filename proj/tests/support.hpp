#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "compcent/graph.hpp"
#include "compcent/random.hpp"

namespace testing {

using compcent::Edge;
using compcent::Rng;
using compcent::WeightedDigraph;

inline std::vector<std::string> node_names(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("n" + std::to_string(i));
  return labels;
}

// Erdos-Renyi digraph. Integer weights in [1, max_weight] when integral.
inline WeightedDigraph random_digraph(std::size_t n, double p, std::uint64_t seed,
                                      bool integral = false, int max_weight = 9) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || rng.uniform() >= p) continue;
      const double w = integral ? std::floor(rng.uniform() * max_weight) + 1.0
                                : 0.1 + rng.uniform() * 10.0;
      edges.push_back({i, j, w});
    }
  }
  return WeightedDigraph(node_names(n), edges);
}

// Random digraph made strongly connected by a shuffled Hamiltonian cycle.
inline WeightedDigraph random_strong_digraph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.next() % (i + 1)]);
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < n; ++k) w[order[k]][order[(k + 1) % n]] = 0.5 + rng.uniform() * 5.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && w[i][j] == 0.0 && rng.uniform() < p) w[i][j] = 0.5 + rng.uniform() * 5.0;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w[i][j] > 0.0) edges.push_back({i, j, w[i][j]});
  return WeightedDigraph(node_names(n), edges);
}

// Trade-network look-alike: log-normal node fitness drives both the edge
// probability and the log-normal weights; a shuffled cycle keeps it strongly
// connected.
inline WeightedDigraph wtw_like_digraph(std::size_t n, double density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> fit(n);
  for (auto& f : fit) f = std::exp(rng.normal());
  double mean_fit = 0.0;
  for (double f : fit) mean_fit += f / static_cast<double>(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.next() % (i + 1)]);
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  auto weight = [&](std::size_t i, std::size_t j) {
    return fit[i] * fit[j] * std::exp(rng.normal(0.0, 1.0)) * 1e6;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k], j = order[(k + 1) % n];
    w[i][j] = weight(i, j);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double p = std::min(1.0, density * fit[i] * fit[j] / (mean_fit * mean_fit));
      if (i != j && w[i][j] == 0.0 && rng.uniform() < p) w[i][j] = weight(i, j);
    }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w[i][j] > 0.0) edges.push_back({i, j, w[i][j]});
  return WeightedDigraph(node_names(n), edges);
}

inline WeightedDigraph complete_digraph(std::size_t n, double w = 1.0) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) edges.push_back({i, j, w});
  return WeightedDigraph(node_names(n), edges);
}

inline WeightedDigraph directed_cycle(std::size_t n, double w = 1.0) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, w});
  return WeightedDigraph(node_names(n), edges);
}

// Transitive closure by Floyd-Warshall on booleans.
inline std::vector<std::vector<bool>> reachability(const WeightedDigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& e : g.edges()) r[e.source][e.target] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

// Largest mutually reachable class; ties to the one with the smallest member.
inline std::vector<std::size_t> brute_force_lscc(const WeightedDigraph& g) {
  const auto r = reachability(g);
  const std::size_t n = g.node_count();
  std::vector<std::size_t> best;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = 0; j < n; ++j) {
      if (r[i][j] && r[j][i]) {
        cls.push_back(j);
        seen[j] = true;
      }
    }
    if (cls.size() > best.size()) best = cls;
  }
  return best;
}

// Minimum s-t cut by enumerating every node subset containing s but not t.
inline double exhaustive_min_cut(const WeightedDigraph& g, std::size_t s, std::size_t t) {
  const std::size_t n = g.node_count();
  double best = INFINITY;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> s & 1u) || (mask >> t & 1u)) continue;
    double cut = 0.0;
    for (const auto& e : g.edges())
      if ((mask >> e.source & 1u) && !(mask >> e.target & 1u)) cut += e.weight;
    best = std::min(best, cut);
  }
  return best;
}

// Cyclic Jacobi eigenvalues of a dense symmetric matrix, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline std::vector<double> normal_sample(std::size_t n, std::uint64_t seed, double shift = 0.0) {
  Rng rng(seed);
  std::vector<double> xs(n);
  for (auto& x : xs) x = rng.normal() + shift;
  return xs;
}

inline std::vector<double> lognormal_sample(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> xs(n);
  for (auto& x : xs) x = std::exp(rng.normal());
  return xs;
}

}  // namespace testing
