#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "clan/graph.hpp"

namespace clan {

/// One string value per node; an empty value leaves the attribute unset.
struct NodeColumn {
  std::string name;
  std::vector<std::string> values;
};

void write_dot(std::ostream& out, const Graph& graph, std::span<const NodeColumn> columns);
/// GEXF 1.2 with string-typed node attributes.
void write_gexf(std::ostream& out, const Graph& graph, std::span<const NodeColumn> columns);
/// Header row `id<TAB>col...`, one row per node.
void write_node_table(std::ostream& out, const Graph& graph, std::span<const NodeColumn> columns);

}  // namespace clan
