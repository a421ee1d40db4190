#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clan/dataset.hpp"
#include "clan/graph.hpp"

namespace clan {

/// Planted-partition graph with per-block token vocabularies.
struct SbmSpec {
  std::vector<std::size_t> block_sizes;
  double p_in = 0.1;
  double p_out = 0.01;
  std::size_t tokens_per_node = 10;
  std::size_t vocab_per_block = 20;
  /// Fraction of each block's vocabulary shared by all blocks.
  double token_overlap = 0.0;
  /// Block 0 uses p_in * (1 + c) internally (capped at 1), so its members
  /// have systematically higher degree when c > 0.
  double degree_label_correlation = 0.0;
  std::uint64_t seed = 42;

  /// Throws clan::Error describing the first violated constraint.
  void validate() const;
};

struct AttributedGraph {
  Graph graph;
  AttributeTable attributes;
  LabelTable labels;
};

/// Nodes are "n0".."n{N-1}" in block order, labeled "block{b}". Every node is
/// present even if isolated. Deterministic for a given spec.
AttributedGraph generate_attributed_sbm(const SbmSpec& spec);

/// Token list of one block: shared tokens "w{i}" then block-specific
/// hashtags "#b{block}t{i}".
std::vector<std::string> block_vocabulary(const SbmSpec& spec, std::size_t block);

}  // namespace clan
