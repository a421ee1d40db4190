#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clan/dataset.hpp"
#include "clan/graph.hpp"

namespace clan {

/// Degree buckets: one per degree value, or [0,0], [1,1], [2,3], [4,7], ...
enum class Bucketing { kUnit, kLog2 };

const char* to_string(Bucketing b);
Bucketing parse_bucketing(const std::string& name);

struct RatioPoint {
  std::size_t degree_lo = 0;
  std::size_t degree_hi = 0;
  double midpoint = 0.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  /// n_a / n_b; nullopt (and excluded from the fit) when n_b == 0.
  std::optional<double> ratio;
};

/// Per-degree-bucket ratio of group-A to group-B labeled nodes, with a
/// least-squares line through (midpoint, ratio) of the included points.
struct RatioCurve {
  std::string group_a;
  std::string group_b;
  Bucketing bucketing = Bucketing::kLog2;
  /// Ascending, only buckets holding at least one node of either group.
  std::vector<RatioPoint> points;
  double fitted_slope = 0.0;
  double fitted_intercept = 0.0;
  std::size_t fitted_points = 0;
};

/// Degree is the number of distinct neighbors (self-loops excluded).
/// Throws if either group has no labeled node.
RatioCurve degree_ratio_curve(const Graph& graph, const LabelTable& truth, const std::string& group_a,
                              const std::string& group_b, Bucketing bucketing = Bucketing::kLog2);

struct SubsampleOptions {
  Bucketing bucketing = Bucketing::kLog2;
  /// Floor for the target ratio.
  double epsilon = 0.05;
  /// Stop once |slope - target| <= max(rel_tolerance * |target|, abs_tolerance).
  double rel_tolerance = 0.10;
  double abs_tolerance = 0.01;
  /// Share of each bucket's planned removals applied per round (at least one
  /// node); later rounds re-plan on the shrunken graph.
  double step_fraction = 0.5;
  int max_rounds = 40;
  /// Stop after this many consecutive rounds without a closer slope.
  int patience = 3;
};

struct BucketPlan {
  int round = 0;
  double midpoint = 0.0;
  double target_ratio = 0.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t remove_a = 0;
  std::size_t remove_b = 0;
  bool feasible = true;
};

struct SubsampleReport {
  double target_slope = 0.0;
  double input_slope = 0.0;
  double achieved_slope = 0.0;
  double tolerance = 0.0;
  bool within_tolerance = false;
  /// Rounds leading to the returned state.
  int rounds = 0;
  std::size_t removed_nodes = 0;
  /// Buckets touched by the kept rounds, plus infeasible ones from any round.
  std::vector<BucketPlan> buckets;
};

struct SubsampleResult {
  Graph graph;
  LabelTable labels;
  /// Input ids of the surviving nodes, ascending; node i of `graph` is kept[i].
  std::vector<NodeId> kept;
  /// Curve recomputed on the output.
  RatioCurve achieved;
  SubsampleReport report;
};

/// Removes group-A or group-B nodes per degree bucket so that the ratio
/// approaches max(epsilon, 1 + target_slope * (d - d_min)), d_min being the
/// lowest fitted midpoint of the input. The over-represented group loses
/// uniformly chosen nodes. Rounds repeat (degrees shift as incident edges go)
/// until the slope is within tolerance, nothing more can be removed, or
/// `patience` rounds pass without progress; the state closest to the target
/// is returned. An input already within tolerance is returned unchanged.
SubsampleResult subsample_to_slope(const Graph& graph, const LabelTable& truth, const std::string& group_a,
                                   const std::string& group_b, double target_slope, std::uint64_t seed,
                                   const SubsampleOptions& options = {});

}  // namespace clan
