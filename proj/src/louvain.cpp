#include "clan/louvain.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "clan/error.hpp"

namespace clan {
namespace {

constexpr double kMonotoneSlack = 1e-12;

void check_cover(const Graph& graph, const Partition& partition) {
  if (partition.node_count() != graph.node_count())
    throw Error("partition covers " + std::to_string(partition.node_count()) + " nodes, graph has " +
                std::to_string(graph.node_count()));
}

void check_monotone(double before, double after, const char* where) {
  if (after < before - kMonotoneSlack)
    throw std::logic_error(std::string("modularity decreased during ") + where + ": " + std::to_string(before) +
                           " -> " + std::to_string(after));
}

}  // namespace

double modularity(const Graph& graph, const Partition& partition) {
  check_cover(graph, partition);
  const double m2 = graph.total_weight_2m();
  if (!(m2 > 0.0)) throw Error("modularity undefined for empty edge set");
  const double m = m2 / 2.0;

  const std::size_t k = partition.sizes().size();
  std::vector<double> internal(k, 0.0);
  std::vector<double> degree(k, 0.0);
  for (const Edge& e : graph.edges()) {
    const CommunityId cu = partition.community_of(e.u);
    if (cu == partition.community_of(e.v)) internal[cu] += e.weight;
  }
  for (NodeId n = 0; n < graph.node_count(); ++n) degree[partition.community_of(n)] += graph.weighted_degree(n);

  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double frac = degree[c] / m2;
    q += internal[c] / m - frac * frac;
  }
  return q;
}

LocalMoveResult local_move_phase(const Graph& graph, const Partition& start, const LouvainConfig& config,
                                 LouvainTrace* trace) {
  check_cover(graph, start);
  if (config.min_gain < 0.0) throw Error("min_gain must be non-negative");
  const double m2 = graph.total_weight_2m();
  if (!(m2 > 0.0)) throw Error("modularity undefined for empty edge set");
  const double m = m2 / 2.0;
  const std::size_t n = graph.node_count();

  std::vector<CommunityId> assignment(start.assignment().begin(), start.assignment().end());
  std::vector<double> total(start.sizes().size(), 0.0);
  for (NodeId i = 0; i < n; ++i) total[assignment[i]] += graph.weighted_degree(i);

  std::vector<double> link(total.size(), 0.0);
  std::vector<CommunityId> touched;
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::mt19937_64 rng(config.seed);

  double q_prev = 0.0;
  if (trace) {
    q_prev = modularity(graph, start);
    trace->pass_q.push_back(q_prev);
  }

  bool improved = false;
  while (true) {
    if (!config.deterministic_order) std::shuffle(order.begin(), order.end(), rng);
    bool moved = false;
    for (NodeId node : order) {
      const CommunityId current = assignment[node];
      const double k = graph.weighted_degree(node);

      touched.clear();
      for (const Neighbor& nb : graph.neighbors(node)) {
        if (nb.node == node) continue;
        const CommunityId c = assignment[nb.node];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += nb.weight;
      }
      std::sort(touched.begin(), touched.end());

      total[current] -= k;
      const double stay = link[current] - total[current] * k / m2;
      CommunityId best = current;
      double best_gain = stay;
      for (CommunityId c : touched) {
        const double gain = link[c] - total[c] * k / m2;
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      if (best != current && (best_gain - stay) / m > config.min_gain) {
        assignment[node] = best;
        moved = true;
      }
      total[assignment[node]] += k;
      for (CommunityId c : touched) link[c] = 0.0;
    }
    if (trace) {
      const double q = modularity(graph, Partition(assignment));
      check_monotone(q_prev, q, "local move pass");
      trace->pass_q.push_back(q);
      q_prev = q;
    }
    if (!moved) break;
    improved = true;
  }
  return {Partition(std::move(assignment)), improved};
}

Aggregation aggregate_graph(const Graph& graph, const Partition& partition) {
  check_cover(graph, partition);
  Aggregation out;
  out.mapping.assign(partition.sizes().size(), -1);
  GraphBuilder builder;
  for (CommunityId c = 0; c < partition.sizes().size(); ++c)
    if (partition.sizes()[c] > 0) out.mapping[c] = builder.add_node(std::to_string(builder.node_count()));
  for (const Edge& e : graph.edges()) {
    builder.add_edge(static_cast<NodeId>(out.mapping[partition.community_of(e.u)]),
                     static_cast<NodeId>(out.mapping[partition.community_of(e.v)]), e.weight);
  }
  out.graph = std::move(builder).build();
  return out;
}

Partition louvain(const Graph& graph, const LouvainConfig& config, LouvainTrace* trace) {
  if (!(graph.total_weight_2m() > 0.0)) throw Error("modularity undefined for empty edge set");
  if (config.max_levels < 1) throw Error("max_levels must be at least 1");

  LouvainTrace local;
  LouvainTrace& t = trace ? *trace : local;

  std::vector<CommunityId> membership(graph.node_count());
  std::iota(membership.begin(), membership.end(), CommunityId{0});
  double q_prev = modularity(graph, Partition(membership));
  t.level_q.push_back(q_prev);

  std::optional<Graph> level_graph;
  for (int level = 0; level < config.max_levels; ++level) {
    const Graph& g = level_graph ? *level_graph : graph;
    LocalMoveResult moved = local_move_phase(g, Partition::singletons(g.node_count()), config, &t);
    if (!moved.improved) break;

    Aggregation agg = aggregate_graph(g, moved.partition);
    for (CommunityId& c : membership)
      c = static_cast<CommunityId>(agg.mapping[moved.partition.community_of(c)]);

    const double q = modularity(graph, Partition(membership));
    check_monotone(q_prev, q, "aggregation level");
    t.level_q.push_back(q);
    t.aggregation_drift.push_back(modularity(agg.graph, Partition::singletons(agg.graph.node_count())) -
                                  modularity(g, moved.partition));
    q_prev = q;
    level_graph = std::move(agg.graph);
  }
  return Partition(std::move(membership)).normalized();
}

}  // namespace clan
