#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clan/graph.hpp"

namespace clan {

/// Per-node token lists (lowercase) and the sorted vocabulary they span.
class AttributeTable {
 public:
  AttributeTable() = default;
  explicit AttributeTable(std::vector<std::vector<std::string>> tokens);

  std::size_t node_count() const noexcept { return tokens_.size(); }
  /// Empty for nodes beyond the table (nodes added after loading).
  std::span<const std::string> tokens(NodeId node) const;
  std::span<const std::string> vocabulary() const noexcept { return vocabulary_; }

  /// Row i of the result is row keep[i] of this table.
  AttributeTable restricted(std::span<const NodeId> keep) const;

 private:
  std::vector<std::vector<std::string>> tokens_;
  std::vector<std::string> vocabulary_;
};

/// Partial node -> ground-truth label map.
class LabelTable {
 public:
  LabelTable() = default;
  explicit LabelTable(std::size_t node_count) : labels_(node_count) {}

  /// Throws on a conflicting relabel; re-setting the same label is a no-op.
  void set(NodeId node, std::string label);

  std::size_t node_count() const noexcept { return labels_.size(); }
  const std::optional<std::string>& label_of(NodeId node) const;
  std::size_t labeled_count() const;
  /// Distinct labels, sorted.
  std::vector<std::string> label_set() const;

  LabelTable restricted(std::span<const NodeId> keep) const;

 private:
  std::vector<std::optional<std::string>> labels_;
};

struct EdgeListOptions {
  /// Collapse multiplicities and weights to 1.
  bool unweighted = false;
};

/// Lowercase, split on whitespace, trim non-alphanumerics (except '#' and
/// '@') from both ends of each word; empty words are dropped.
std::vector<std::string> tokenize(std::string_view text);

/// `src<TAB>dst[<TAB>weight]` lines; '#' lines are comments. Ids are mapped
/// to dense node ids in first-seen order.
Graph parse_edge_list(std::istream& in, const std::string& source, const EdgeListOptions& options = {});
Graph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options = {});

/// JSON lines, `{"id": ..., "tokens": [...]}` or `{"id": ..., "text": ...}`.
/// Unknown ids are added to `graph` as isolated nodes.
AttributeTable parse_attributes(std::istream& in, const std::string& source, Graph& graph);
AttributeTable load_attributes(const std::filesystem::path& path, Graph& graph);

/// Headerless `id,label` CSV. Every id must already be a node of `graph`.
LabelTable parse_labels(std::istream& in, const std::string& source, const Graph& graph);
LabelTable load_labels(const std::filesystem::path& path, const Graph& graph);

void write_edge_list(std::ostream& out, const Graph& graph);
void write_attributes(std::ostream& out, const Graph& graph, const AttributeTable& attrs);
void write_labels(std::ostream& out, const Graph& graph, const LabelTable& labels);

}  // namespace clan
