#include "clan/partition.hpp"

#include <algorithm>
#include <numeric>

namespace clan {

Partition::Partition(std::vector<CommunityId> assignment) : assignment_(std::move(assignment)) {
  for (CommunityId c : assignment_) {
    if (c >= sizes_.size()) sizes_.resize(static_cast<std::size_t>(c) + 1, 0);
    if (sizes_[c]++ == 0) ++community_count_;
  }
}

Partition Partition::singletons(std::size_t node_count) {
  std::vector<CommunityId> a(node_count);
  std::iota(a.begin(), a.end(), CommunityId{0});
  return Partition(std::move(a));
}

Partition Partition::single_community(std::size_t node_count) {
  return Partition(std::vector<CommunityId>(node_count, 0));
}

std::vector<std::vector<NodeId>> Partition::members() const {
  std::vector<std::vector<NodeId>> out(sizes_.size());
  for (std::size_t c = 0; c < sizes_.size(); ++c) out[c].reserve(sizes_[c]);
  for (std::size_t n = 0; n < assignment_.size(); ++n) out[assignment_[n]].push_back(static_cast<NodeId>(n));
  return out;
}

Partition Partition::normalized() const {
  constexpr auto kNone = static_cast<NodeId>(-1);
  std::vector<NodeId> first_member(sizes_.size(), kNone);
  for (std::size_t n = 0; n < assignment_.size(); ++n) {
    NodeId& f = first_member[assignment_[n]];
    if (f == kNone) f = static_cast<NodeId>(n);
  }
  std::vector<CommunityId> order;
  order.reserve(community_count_);
  for (CommunityId c = 0; c < sizes_.size(); ++c)
    if (sizes_[c] > 0) order.push_back(c);
  std::sort(order.begin(), order.end(), [&](CommunityId a, CommunityId b) {
    if (sizes_[a] != sizes_[b]) return sizes_[a] > sizes_[b];
    return first_member[a] < first_member[b];
  });
  std::vector<CommunityId> relabel(sizes_.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) relabel[order[i]] = static_cast<CommunityId>(i);
  std::vector<CommunityId> out(assignment_.size());
  for (std::size_t n = 0; n < assignment_.size(); ++n) out[n] = relabel[assignment_[n]];
  return Partition(std::move(out));
}

PartialAssignment to_partial(const Partition& partition) {
  PartialAssignment out(partition.node_count());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = partition.community_of(static_cast<NodeId>(n));
  return out;
}

}  // namespace clan
