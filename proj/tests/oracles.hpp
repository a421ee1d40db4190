#pragma once

// Reference computations written independently of the library code paths.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "clan/graph.hpp"
#include "clan/partition.hpp"

namespace clan::oracle {

/// Q = (1/2m) * sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j) over a dense
/// adjacency matrix, with A_ii = 2w for a self-loop of weight w.
inline double modularity_matrix(std::size_t n, const std::vector<Edge>& edges, const std::vector<CommunityId>& c) {
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      a[e.u][e.u] += 2.0 * e.weight;
    } else {
      a[e.u][e.v] += e.weight;
      a[e.v][e.u] += e.weight;
    }
  }
  std::vector<double> k(n, 0.0);
  double two_m = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k[i] += a[i][j];
      two_m += a[i][j];
    }
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c[i] == c[j]) q += a[i][j] - k[i] * k[j] / two_m;
  return q / two_m;
}

/// Calls visit(assignment) for every set partition of n elements, as
/// restricted growth strings.
inline void for_each_set_partition(std::size_t n, const std::function<void(const std::vector<CommunityId>&)>& visit) {
  std::vector<CommunityId> rgs(n, 0);
  std::function<void(std::size_t, CommunityId)> rec = [&](std::size_t i, CommunityId max_used) {
    if (i == n) {
      visit(rgs);
      return;
    }
    for (CommunityId c = 0; c <= max_used + 1; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(max_used, c));
    }
  };
  if (n == 0) return;
  rgs[0] = 0;
  rec(1, 0);
}

/// Random simple graph (optionally with self-loops) on n nodes with at least
/// one edge; weights in {1, 2, 3}.
inline std::vector<Edge> random_edges(std::mt19937_64& rng, std::size_t n, double p, bool self_loops) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(1, 3);
  std::vector<Edge> edges;
  while (edges.empty()) {
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = self_loops ? u : u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v, static_cast<double>(weight(rng))});
  }
  return edges;
}

inline std::vector<CommunityId> random_assignment(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<CommunityId> pick(0, static_cast<CommunityId>(n - 1));
  std::vector<CommunityId> c(n);
  for (auto& x : c) x = pick(rng);
  return c;
}

}  // namespace clan::oracle
