#pragma once

#include <cstdint>
#include <vector>

#include "clan/graph.hpp"
#include "clan/partition.hpp"

namespace clan {

/// Weighted Newman-Girvan modularity,
///   Q = sum_c [ L_c / m - (d_c / 2m)^2 ],
/// with m the total edge weight, L_c the weight of edges inside c (self-loops
/// counted once) and d_c the summed weighted degree of c.
/// Throws when the graph has no edges.
double modularity(const Graph& graph, const Partition& partition);

struct LouvainConfig {
  std::uint64_t seed = 42;
  double min_gain = 1e-7;
  int max_levels = 32;
  /// Visit nodes in ascending id order; otherwise a seeded shuffle per pass.
  bool deterministic_order = true;
};

/// Modularity recorded after every local-move pass and every level.
struct LouvainTrace {
  std::vector<double> pass_q;
  std::vector<double> level_q;
  /// Q(aggregate, identity) - Q(graph, partition) per aggregation.
  std::vector<double> aggregation_drift;
};

struct LocalMoveResult {
  Partition partition;
  bool improved = false;
};

/// Greedy node moves until a full pass finds no move gaining more than
/// config.min_gain. Ties between target communities go to the lowest id.
LocalMoveResult local_move_phase(const Graph& graph, const Partition& start, const LouvainConfig& config,
                                 LouvainTrace* trace = nullptr);

struct Aggregation {
  Graph graph;
  /// community id -> super-node id (-1 for empty communities).
  std::vector<std::int64_t> mapping;
};

/// Collapses each non-empty community into a super-node. Internal weight
/// becomes a self-loop; ids are assigned in ascending community order.
Aggregation aggregate_graph(const Graph& graph, const Partition& partition);

/// Multi-level Louvain. The result is over the original nodes and normalized
/// (community 0 is the largest). Throws on an edgeless graph and if Q ever
/// decreases between passes or levels.
Partition louvain(const Graph& graph, const LouvainConfig& config = {}, LouvainTrace* trace = nullptr);

}  // namespace clan
