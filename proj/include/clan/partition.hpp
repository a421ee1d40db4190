#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clan/graph.hpp"

namespace clan {

using CommunityId = std::uint32_t;

/// Total assignment node -> community with a size index.
///
/// Ids need not be contiguous; sizes() is indexed by community id and may
/// contain zeros. normalized() yields the canonical contiguous form.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<CommunityId> assignment);

  static Partition singletons(std::size_t node_count);
  static Partition single_community(std::size_t node_count);

  std::size_t node_count() const noexcept { return assignment_.size(); }
  CommunityId community_of(NodeId node) const { return assignment_.at(node); }
  std::span<const CommunityId> assignment() const noexcept { return assignment_; }

  /// Indexed by community id; zero for unused ids.
  std::span<const std::size_t> sizes() const noexcept { return sizes_; }
  std::size_t size_of(CommunityId c) const { return c < sizes_.size() ? sizes_[c] : 0; }
  /// Number of non-empty communities.
  std::size_t community_count() const noexcept { return community_count_; }
  bool is_contiguous() const noexcept { return community_count_ == sizes_.size(); }

  /// Member lists, indexed by community id, each ascending.
  std::vector<std::vector<NodeId>> members() const;

  /// Relabels communities 0..k-1 by decreasing size, ties by smallest member.
  Partition normalized() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.assignment_ == b.assignment_; }

 private:
  std::vector<CommunityId> assignment_;
  std::vector<std::size_t> sizes_;
  std::size_t community_count_ = 0;
};

/// Node -> community, where nullopt means "not in any significant community".
using PartialAssignment = std::vector<std::optional<CommunityId>>;

/// Total partition viewed as a partial assignment.
PartialAssignment to_partial(const Partition& partition);

}  // namespace clan
