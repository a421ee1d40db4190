#include "clan/evaluation.hpp"

#include <algorithm>
#include <unordered_map>

#include "clan/error.hpp"

namespace clan {
namespace {

std::size_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// For each group on `from`, its best-F1 partner on `to`.
std::vector<GroupMatch> best_matches(std::span<const std::vector<NodeId>> from,
                                     std::span<const std::vector<NodeId>> to) {
  std::vector<GroupMatch> out;
  out.reserve(from.size());
  for (const auto& group : from) {
    GroupMatch best{0, 0.0, 0.0};
    bool found = false;
    for (std::size_t j = 0; j < to.size(); ++j) {
      const std::size_t inter = intersection_size(group, to[j]);
      const double f1 = 2.0 * static_cast<double>(inter) / static_cast<double>(group.size() + to[j].size());
      const bool better = !found || f1 > best.f1 || (f1 == best.f1 && to[j].size() > to[best.partner].size());
      if (better) {
        const double jac = static_cast<double>(inter) / static_cast<double>(group.size() + to[j].size() - inter);
        best = {j, f1, jac};
        found = true;
      }
    }
    out.push_back(best);
  }
  return out;
}

double mean_of(const std::vector<GroupMatch>& matches, double GroupMatch::*field) {
  if (matches.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& m : matches) sum += m.*field;
  return sum / static_cast<double>(matches.size());
}

}  // namespace

double pairwise_f1(std::span<const NodeId> detected, std::span<const NodeId> truth) {
  if (truth.empty()) throw Error("F1 undefined for an empty truth set");
  const std::size_t inter = intersection_size(detected, truth);
  return 2.0 * static_cast<double>(inter) / static_cast<double>(detected.size() + truth.size());
}

double pairwise_jaccard(std::span<const NodeId> detected, std::span<const NodeId> truth) {
  if (detected.empty() && truth.empty()) throw Error("Jaccard undefined for two empty sets");
  const std::size_t inter = intersection_size(detected, truth);
  return static_cast<double>(inter) / static_cast<double>(detected.size() + truth.size() - inter);
}

BestMatchScores symmetric_best_match(std::span<const std::vector<NodeId>> detected,
                                     std::span<const std::vector<NodeId>> truth) {
  for (const auto& g : truth)
    if (g.empty()) throw Error("truth groups must be non-empty");
  for (const auto& g : detected)
    if (g.empty()) throw Error("detected groups must be non-empty");

  BestMatchScores s;
  s.detected_to_truth = best_matches(detected, truth);
  s.truth_to_detected = best_matches(truth, detected);
  s.avg_f1 = 0.5 * (mean_of(s.detected_to_truth, &GroupMatch::f1) + mean_of(s.truth_to_detected, &GroupMatch::f1));
  s.avg_jaccard = 0.5 * (mean_of(s.detected_to_truth, &GroupMatch::jaccard) +
                         mean_of(s.truth_to_detected, &GroupMatch::jaccard));
  return s;
}

std::map<CommunityId, std::string> MatchReport::matching() const {
  std::map<CommunityId, std::string> out;
  for (const auto& c : per_community) out.emplace(c.community, c.best_truth);
  return out;
}

MatchReport averaged_scores(const PartialAssignment& detected, const LabelTable& truth) {
  const std::vector<std::string> labels = truth.label_set();
  if (labels.empty()) throw Error("no ground-truth labels to evaluate against");
  std::unordered_map<std::string, std::size_t> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) label_index.emplace(labels[i], i);

  std::vector<std::vector<NodeId>> truth_groups(labels.size());
  std::map<CommunityId, std::vector<NodeId>> detected_by_id;
  MatchReport report;
  for (NodeId n = 0; n < truth.node_count(); ++n) {
    const auto& label = truth.label_of(n);
    if (!label) continue;
    ++report.evaluated_nodes;
    truth_groups[label_index.at(*label)].push_back(n);
    if (n < detected.size() && detected[n]) detected_by_id[*detected[n]].push_back(n);
  }

  std::vector<CommunityId> ids;
  std::vector<std::vector<NodeId>> detected_groups;
  for (auto& [id, members] : detected_by_id) {
    ids.push_back(id);
    detected_groups.push_back(std::move(members));
  }

  const BestMatchScores s = symmetric_best_match(detected_groups, truth_groups);
  report.avg_f1 = s.avg_f1;
  report.avg_jaccard = s.avg_jaccard;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const GroupMatch& m = s.detected_to_truth[i];
    report.per_community.push_back({ids[i], detected_groups[i].size(), labels[m.partner], m.f1, m.jaccard});
  }
  return report;
}

double unlabeled_fraction(std::size_t node_count, const PartialAssignment& assignment) {
  if (node_count == 0) throw Error("unlabeled fraction needs at least one node");
  std::size_t assigned = 0;
  for (std::size_t n = 0; n < std::min(node_count, assignment.size()); ++n)
    if (assignment[n]) ++assigned;
  return 100.0 * static_cast<double>(node_count - assigned) / static_cast<double>(node_count);
}

TokenAudit discarded_token_audit(const AttributeTable& attrs, const PartialAssignment& assignment,
                                 const AuditOptions& options) {
  struct Usage {
    std::size_t occurrences = 0;
    bool kept = false;
  };
  std::map<std::string, Usage> usage;
  for (NodeId n = 0; n < attrs.node_count(); ++n) {
    const bool assigned = n < assignment.size() && assignment[n].has_value();
    for (const auto& tok : attrs.tokens(n)) {
      if (options.hashtags_only && (tok.empty() || tok.front() != '#')) continue;
      Usage& u = usage[tok];
      ++u.occurrences;
      u.kept = u.kept || assigned;
    }
  }

  TokenAudit audit;
  audit.hashtags_only = options.hashtags_only;
  audit.vocabulary_size = usage.size();
  std::vector<std::pair<std::string, std::size_t>> discarded;
  for (const auto& [tok, u] : usage)
    if (!u.kept) discarded.emplace_back(tok, u.occurrences);
  audit.discarded_count = discarded.size();
  audit.discarded_pct =
      usage.empty() ? 0.0 : 100.0 * static_cast<double>(discarded.size()) / static_cast<double>(usage.size());
  std::stable_sort(discarded.begin(), discarded.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  for (std::size_t i = 0; i < std::min(options.max_examples, discarded.size()); ++i)
    audit.examples.push_back(discarded[i].first);
  return audit;
}

const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::kAgree:
      return "agree";
    case Agreement::kDisagree:
      return "disagree";
    case Agreement::kUnassigned:
      return "unassigned";
  }
  return "unknown";
}

std::vector<std::optional<Agreement>> agreement_coloring(const PartialAssignment& detected,
                                                         const LabelTable& truth,
                                                         const std::map<CommunityId, std::string>& matching) {
  std::vector<std::optional<Agreement>> out(truth.node_count());
  for (NodeId n = 0; n < truth.node_count(); ++n) {
    const auto& label = truth.label_of(n);
    if (!label) continue;
    if (n >= detected.size() || !detected[n]) {
      out[n] = Agreement::kUnassigned;
      continue;
    }
    auto it = matching.find(*detected[n]);
    out[n] = (it != matching.end() && it->second == *label) ? Agreement::kAgree : Agreement::kDisagree;
  }
  return out;
}

}  // namespace clan
