#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clan/dataset.hpp"
#include "clan/partition.hpp"

namespace clan {

/// 2|A∩B| / (|A|+|B|). Inputs must be sorted and unique. Throws if truth is empty.
double pairwise_f1(std::span<const NodeId> detected, std::span<const NodeId> truth);

/// |A∩B| / |A∪B|. Inputs must be sorted and unique. Throws if both are empty.
double pairwise_jaccard(std::span<const NodeId> detected, std::span<const NodeId> truth);

/// Best F1 partner of one group on the other side.
struct GroupMatch {
  std::size_t partner;  // index into the other side; meaningless when the other side is empty
  double f1 = 0.0;
  double jaccard = 0.0;
};

struct BestMatchScores {
  double avg_f1 = 0.0;
  double avg_jaccard = 0.0;
  std::vector<GroupMatch> detected_to_truth;
  std::vector<GroupMatch> truth_to_detected;
};

/// Symmetric average best-match: mean of the average best F1 over detected
/// groups and the average best F1 over truth groups. Jaccard is reported for
/// the same best-F1 pairs. Ties prefer the larger partner, then the lower
/// index. An empty side contributes 0.
BestMatchScores symmetric_best_match(std::span<const std::vector<NodeId>> detected,
                                     std::span<const std::vector<NodeId>> truth);

struct CommunityScore {
  CommunityId community;
  std::size_t labeled_members;
  std::string best_truth;
  double f1;
  double jaccard;
};

struct MatchReport {
  double avg_f1 = 0.0;
  double avg_jaccard = 0.0;
  std::size_t evaluated_nodes = 0;
  /// Detected communities that contain labeled nodes, ascending id.
  std::vector<CommunityScore> per_community;

  std::map<CommunityId, std::string> matching() const;
};

/// Scores restricted to labeled nodes. Unassigned labeled nodes belong to no
/// detected community and so only lower truth-side recall.
MatchReport averaged_scores(const PartialAssignment& detected, const LabelTable& truth);

/// Percentage of the node_count nodes with no assignment.
double unlabeled_fraction(std::size_t node_count, const PartialAssignment& assignment);

struct TokenAudit {
  std::size_t vocabulary_size = 0;
  std::size_t discarded_count = 0;
  double discarded_pct = 0.0;
  /// Most frequent discarded tokens first, ties alphabetical.
  std::vector<std::string> examples;
  bool hashtags_only = false;
};

struct AuditOptions {
  bool hashtags_only = false;
  std::size_t max_examples = 10;
};

/// A token is discarded when no assigned node carries it.
TokenAudit discarded_token_audit(const AttributeTable& attrs, const PartialAssignment& assignment,
                                 const AuditOptions& options = {});

enum class Agreement { kAgree, kDisagree, kUnassigned };

const char* to_string(Agreement a);

/// Per node; nullopt for nodes without a ground-truth label. Unassigned
/// labeled nodes are kUnassigned.
std::vector<std::optional<Agreement>> agreement_coloring(const PartialAssignment& detected,
                                                         const LabelTable& truth,
                                                         const std::map<CommunityId, std::string>& matching);

struct MetricReport {
  MatchReport scores;
  double unlabeled_pct = 0.0;
  std::optional<double> q_final;
  std::optional<TokenAudit> discarded_tokens;
};

}  // namespace clan
