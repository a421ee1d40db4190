#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clan {

using NodeId = std::uint32_t;

/// Undirected edge, stored with u <= v.
struct Edge {
  NodeId u;
  NodeId v;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Undirected weighted graph over dense node ids with merged parallel edges.
///
/// Self-loops appear once in their endpoint's neighbor list and contribute
/// twice their weight to its weighted degree, so that
/// total_weight_2m() == sum of weighted degrees == 2 * sum of edge weights.
class Graph {
 public:
  Graph() = default;

  /// Convenience constructor: nodes are named "0".."n-1".
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return external_ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Canonical edge list, sorted by (u, v), u <= v.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(NodeId node) const;

  double weighted_degree(NodeId node) const { return weighted_degree_.at(node); }
  /// Number of distinct neighbors other than the node itself.
  std::size_t degree(NodeId node) const;
  double self_loop_weight(NodeId node) const;

  double total_weight() const noexcept { return total_weight_2m_ / 2.0; }
  double total_weight_2m() const noexcept { return total_weight_2m_; }

  const std::string& external_id(NodeId node) const { return external_ids_.at(node); }
  std::span<const std::string> external_ids() const noexcept { return external_ids_; }
  std::optional<NodeId> find(std::string_view external_id) const;

  /// Adds a degree-0 node, or returns the existing id for a known name.
  NodeId add_isolated_node(std::string_view external_id);

 private:
  friend class GraphBuilder;

  std::vector<std::string> external_ids_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> weighted_degree_;
  double total_weight_2m_ = 0.0;
};

/// Accumulates nodes and edges; parallel edges are merged by summing weights.
class GraphBuilder {
 public:
  /// Dense ids are handed out in first-seen order.
  NodeId add_node(std::string_view external_id);
  void add_edge(NodeId u, NodeId v, double weight = 1.0);

  std::size_t node_count() const noexcept { return external_ids_.size(); }

  /// With `unweighted`, every merged edge gets weight 1.
  Graph build(bool unweighted = false) &&;

 private:
  std::vector<std::string> external_ids_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
};

/// Subgraph induced by `keep` (ascending, unique). Node i of the result is
/// keep[i]; external ids are carried over.
Graph induced_subgraph(const Graph& graph, std::span<const NodeId> keep);

}  // namespace clan
