#include "clan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clan/error.hpp"

namespace clan {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  GraphBuilder builder;
  for (std::size_t i = 0; i < node_count; ++i) builder.add_node(std::to_string(i));
  for (const Edge& e : edges) builder.add_edge(e.u, e.v, e.weight);
  return std::move(builder).build();
}

std::span<const Neighbor> Graph::neighbors(NodeId node) const {
  if (node >= node_count()) throw std::out_of_range("node id out of range");
  return std::span<const Neighbor>(adjacency_).subspan(offsets_[node],
                                                       offsets_[node + 1] - offsets_[node]);
}

std::size_t Graph::degree(NodeId node) const {
  auto nbrs = neighbors(node);
  return static_cast<std::size_t>(
      std::count_if(nbrs.begin(), nbrs.end(), [node](const Neighbor& n) { return n.node != node; }));
}

double Graph::self_loop_weight(NodeId node) const {
  for (const Neighbor& n : neighbors(node))
    if (n.node == node) return n.weight;
  return 0.0;
}

std::optional<NodeId> Graph::find(std::string_view external_id) const {
  auto it = index_.find(std::string(external_id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::add_isolated_node(std::string_view external_id) {
  if (auto existing = find(external_id)) return *existing;
  const auto id = static_cast<NodeId>(external_ids_.size());
  external_ids_.emplace_back(external_id);
  index_.emplace(external_ids_.back(), id);
  offsets_.push_back(adjacency_.size());
  weighted_degree_.push_back(0.0);
  return id;
}

NodeId GraphBuilder::add_node(std::string_view external_id) {
  std::string key(external_id);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<NodeId>(external_ids_.size());
  index_.emplace(key, id);
  external_ids_.push_back(std::move(key));
  return id;
}

void GraphBuilder::add_edge(NodeId u, NodeId v, double weight) {
  if (u >= external_ids_.size() || v >= external_ids_.size())
    throw std::out_of_range("edge endpoint is not a known node");
  if (!(weight > 0.0) || !std::isfinite(weight)) throw Error("edge weight must be positive and finite");
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, weight});
}

Graph GraphBuilder::build(bool unweighted) && {
  Graph g;
  g.external_ids_ = std::move(external_ids_);
  g.index_ = std::move(index_);

  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (const Edge& e : edges_) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
      g.edges_.back().weight += e.weight;
    } else {
      g.edges_.push_back(e);
    }
  }
  if (unweighted)
    for (Edge& e : g.edges_) e.weight = 1.0;

  const std::size_t n = g.external_ids_.size();
  std::vector<std::size_t> counts(n, 0);
  for (const Edge& e : g.edges_) {
    ++counts[e.u];
    if (e.u != e.v) ++counts[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + counts[i];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  g.weighted_degree_.assign(n, 0.0);
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight};
    g.weighted_degree_[e.u] += e.weight;
    if (e.u != e.v) g.adjacency_[cursor[e.v]++] = {e.u, e.weight};
    g.weighted_degree_[e.v] += e.weight;
  }
  // Neighbor lists come out sorted: edges are visited in (u, v) order.
  for (double d : g.weighted_degree_) g.total_weight_2m_ += d;
  return g;
}

Graph induced_subgraph(const Graph& graph, std::span<const NodeId> keep) {
  std::vector<std::int64_t> remap(graph.node_count(), -1);
  GraphBuilder builder;
  for (NodeId old : keep) remap.at(old) = builder.add_node(graph.external_id(old));
  for (const Edge& e : graph.edges()) {
    if (remap[e.u] < 0 || remap[e.v] < 0) continue;
    builder.add_edge(static_cast<NodeId>(remap[e.u]), static_cast<NodeId>(remap[e.v]), e.weight);
  }
  return std::move(builder).build();
}

}  // namespace clan
