#pragma once

#include <cstddef>
#include <vector>

#include "clan/classifier.hpp"
#include "clan/dataset.hpp"
#include "clan/graph.hpp"
#include "clan/louvain.hpp"
#include "clan/partition.hpp"

namespace clan {

/// Communities strictly larger than the threshold are significant.
struct ThresholdSplit {
  std::size_t threshold = 1;
  std::vector<CommunityId> significant;
  std::vector<CommunityId> minority;

  bool is_significant(CommunityId c) const;
};

/// max(10, ceil(node_count / 100)).
std::size_t default_threshold(std::size_t node_count);

/// Empty communities are ignored. Throws if threshold < 1 or if no
/// community exceeds it.
ThresholdSplit split_by_threshold(const Partition& partition, std::size_t threshold);

/// Like split_by_threshold but an empty significant set is allowed.
ThresholdSplit split_by_threshold_lenient(const Partition& partition, std::size_t threshold);

/// One document per node of a significant community; class = its community.
TokenClassifierModel train_classifier(const AttributeTable& attrs, const Partition& partition,
                                      const ThresholdSplit& split, double alpha);

struct Reassignment {
  NodeId node;
  CommunityId from;
  CommunityId to;
  double posterior;
};

struct ClanResult {
  Partition step1_partition;
  /// Uses only significant community ids; every node is assigned.
  Partition final_partition;
  ThresholdSplit split;
  /// Ascending by node.
  std::vector<Reassignment> reassigned;
};

/// Step 2 on an arbitrary first-stage partition: members of significant
/// communities stay put, every other node is classified by its tokens into
/// a significant community.
ClanResult reassign_minority(const AttributeTable& attrs, const Partition& step1, std::size_t threshold,
                             double alpha);

/// Louvain followed by reassign_minority. The graph is not modified.
ClanResult run_clan(const Graph& graph, const AttributeTable& attrs, std::size_t threshold,
                    const LouvainConfig& louvain_config = {}, double alpha = 1.0);

/// Significant-community membership only; minority members map to nullopt.
PartialAssignment significant_assignment(const Partition& partition, const ThresholdSplit& split);

}  // namespace clan
