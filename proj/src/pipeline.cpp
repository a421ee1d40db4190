#include "clan/pipeline.hpp"

#include <algorithm>
#include <string>

#include "clan/error.hpp"

namespace clan {

bool ThresholdSplit::is_significant(CommunityId c) const {
  return std::binary_search(significant.begin(), significant.end(), c);
}

std::size_t default_threshold(std::size_t node_count) {
  return std::max<std::size_t>(10, (node_count + 99) / 100);
}

ThresholdSplit split_by_threshold_lenient(const Partition& partition, std::size_t threshold) {
  if (threshold < 1) throw Error("threshold must be at least 1");
  ThresholdSplit split;
  split.threshold = threshold;
  const auto sizes = partition.sizes();
  for (CommunityId c = 0; c < sizes.size(); ++c) {
    if (sizes[c] == 0) continue;
    (sizes[c] > threshold ? split.significant : split.minority).push_back(c);
  }
  return split;
}

ThresholdSplit split_by_threshold(const Partition& partition, std::size_t threshold) {
  ThresholdSplit split = split_by_threshold_lenient(partition, threshold);
  if (split.significant.empty())
    throw Error("no significant communities at threshold " + std::to_string(threshold));
  return split;
}

TokenClassifierModel train_classifier(const AttributeTable& attrs, const Partition& partition,
                                      const ThresholdSplit& split, double alpha) {
  if (split.significant.empty()) throw Error("no significant communities to train on");
  std::vector<TrainingDocument> docs;
  for (NodeId n = 0; n < partition.node_count(); ++n) {
    const CommunityId c = partition.community_of(n);
    if (split.is_significant(c)) docs.push_back({c, attrs.tokens(n)});
  }
  return TokenClassifierModel::train(docs, alpha);
}

ClanResult reassign_minority(const AttributeTable& attrs, const Partition& step1, std::size_t threshold,
                             double alpha) {
  ClanResult result;
  result.step1_partition = step1;
  result.split = split_by_threshold(step1, threshold);

  std::vector<CommunityId> final_assignment(step1.assignment().begin(), step1.assignment().end());
  if (!result.split.minority.empty()) {
    const TokenClassifierModel model = train_classifier(attrs, step1, result.split, alpha);
    for (NodeId n = 0; n < step1.node_count(); ++n) {
      const CommunityId from = step1.community_of(n);
      if (result.split.is_significant(from)) continue;
      const Classification cls = model.classify(attrs.tokens(n));
      final_assignment[n] = cls.community;
      result.reassigned.push_back({n, from, cls.community, cls.posterior});
    }
  }
  result.final_partition = Partition(std::move(final_assignment));
  return result;
}

ClanResult run_clan(const Graph& graph, const AttributeTable& attrs, std::size_t threshold,
                    const LouvainConfig& louvain_config, double alpha) {
  if (threshold < 1) throw Error("threshold must be at least 1");
  return reassign_minority(attrs, louvain(graph, louvain_config), threshold, alpha);
}

PartialAssignment significant_assignment(const Partition& partition, const ThresholdSplit& split) {
  PartialAssignment out(partition.node_count());
  for (NodeId n = 0; n < partition.node_count(); ++n) {
    const CommunityId c = partition.community_of(n);
    if (split.is_significant(c)) out[n] = c;
  }
  return out;
}

}  // namespace clan
