#include "clan/skew.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "clan/error.hpp"

namespace clan {
namespace {

std::pair<std::size_t, std::size_t> bucket_of(std::size_t degree, Bucketing bucketing) {
  if (bucketing == Bucketing::kUnit || degree == 0) return {degree, degree};
  const std::size_t lo = std::bit_floor(degree);
  return {lo, 2 * lo - 1};
}

struct BucketMembers {
  std::size_t hi = 0;
  std::vector<NodeId> a;
  std::vector<NodeId> b;
};

// Keyed by bucket lower bound; members ascending by node id.
std::map<std::size_t, BucketMembers> group_by_bucket(const Graph& graph, const LabelTable& truth,
                                                     const std::string& group_a, const std::string& group_b,
                                                     Bucketing bucketing) {
  std::map<std::size_t, BucketMembers> buckets;
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    const auto& label = truth.label_of(n);
    if (!label || (*label != group_a && *label != group_b)) continue;
    const auto [lo, hi] = bucket_of(graph.degree(n), bucketing);
    BucketMembers& bm = buckets[lo];
    bm.hi = hi;
    (*label == group_a ? bm.a : bm.b).push_back(n);
  }
  return buckets;
}

std::size_t damped(std::size_t planned, double fraction) {
  if (planned == 0) return 0;
  const auto step = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(planned)));
  return std::clamp<std::size_t>(step, 1, planned);
}

void fit_line(RatioCurve& curve) {
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : curve.points)
    if (p.ratio) xy.emplace_back(p.midpoint, *p.ratio);
  curve.fitted_points = xy.size();
  curve.fitted_slope = 0.0;
  curve.fitted_intercept = 0.0;
  if (xy.empty()) return;
  const double n = static_cast<double>(xy.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  curve.fitted_slope = sxx > 0.0 ? sxy / sxx : 0.0;
  curve.fitted_intercept = my - curve.fitted_slope * mx;
}

}  // namespace

const char* to_string(Bucketing b) { return b == Bucketing::kUnit ? "unit" : "log2"; }

Bucketing parse_bucketing(const std::string& name) {
  if (name == "unit") return Bucketing::kUnit;
  if (name == "log2") return Bucketing::kLog2;
  throw Error("unknown bucketing '" + name + "' (expected unit or log2)");
}

RatioCurve degree_ratio_curve(const Graph& graph, const LabelTable& truth, const std::string& group_a,
                              const std::string& group_b, Bucketing bucketing) {
  if (group_a == group_b) throw Error("the two groups must differ");
  RatioCurve curve;
  curve.group_a = group_a;
  curve.group_b = group_b;
  curve.bucketing = bucketing;

  std::size_t total_a = 0;
  std::size_t total_b = 0;
  for (const auto& [lo, bm] : group_by_bucket(graph, truth, group_a, group_b, bucketing)) {
    RatioPoint p;
    p.degree_lo = lo;
    p.degree_hi = bm.hi;
    p.midpoint = 0.5 * static_cast<double>(lo + bm.hi);
    p.n_a = bm.a.size();
    p.n_b = bm.b.size();
    if (p.n_b > 0) p.ratio = static_cast<double>(p.n_a) / static_cast<double>(p.n_b);
    total_a += p.n_a;
    total_b += p.n_b;
    curve.points.push_back(p);
  }
  if (total_a == 0) throw Error("group '" + group_a + "' has no labeled nodes");
  if (total_b == 0) throw Error("group '" + group_b + "' has no labeled nodes");
  fit_line(curve);
  return curve;
}

SubsampleResult subsample_to_slope(const Graph& graph, const LabelTable& truth, const std::string& group_a,
                                   const std::string& group_b, double target_slope, std::uint64_t seed,
                                   const SubsampleOptions& options) {
  if (!std::isfinite(target_slope)) throw Error("target slope must be finite");
  if (!(options.epsilon > 0.0)) throw Error("epsilon must be positive");
  if (!(options.step_fraction > 0.0 && options.step_fraction <= 1.0)) throw Error("step_fraction must lie in (0,1]");

  SubsampleResult result;
  result.graph = graph;
  result.labels = truth;
  result.kept.resize(graph.node_count());
  std::iota(result.kept.begin(), result.kept.end(), NodeId{0});

  const RatioCurve input = degree_ratio_curve(graph, truth, group_a, group_b, options.bucketing);
  SubsampleReport& report = result.report;
  report.target_slope = target_slope;
  report.input_slope = input.fitted_slope;
  report.tolerance = std::max(options.rel_tolerance * std::abs(target_slope), options.abs_tolerance);

  double d_min = 0.0;
  bool has_fitted = false;
  for (const auto& p : input.points) {
    if (p.ratio) {
      d_min = p.midpoint;
      has_fitted = true;
      break;
    }
  }
  if (!has_fitted) throw Error("no degree bucket contains group '" + group_b + "'");

  std::mt19937_64 rng(seed);
  // Degree shifts from earlier removals can push later rounds away from the
  // target, so the closest state seen is the one returned.
  SubsampleResult work = result;
  RatioCurve current = input;
  double best_distance = std::abs(input.fitted_slope - target_slope);
  int stale_rounds = 0;
  for (int round = 1; round <= options.max_rounds; ++round) {
    if (best_distance <= report.tolerance || stale_rounds >= options.patience) break;

    std::vector<NodeId> removed;
    std::size_t feasible_buckets = 0;
    std::size_t planned_buckets = 0;
    std::ostringstream diagnostic;
    for (auto& [lo, bm] : group_by_bucket(work.graph, work.labels, group_a, group_b, options.bucketing)) {
      if (bm.b.empty()) continue;
      BucketPlan plan;
      plan.round = round;
      plan.midpoint = 0.5 * static_cast<double>(lo + bm.hi);
      plan.target_ratio = std::max(options.epsilon, 1.0 + target_slope * (plan.midpoint - d_min));
      plan.n_a = bm.a.size();
      plan.n_b = bm.b.size();
      const double na = static_cast<double>(plan.n_a);
      const double nb = static_cast<double>(plan.n_b);
      if (na > plan.target_ratio * nb) {
        const auto keep_a = static_cast<std::size_t>(std::llround(plan.target_ratio * nb));
        plan.remove_a = plan.n_a - std::min(keep_a, plan.n_a);
      } else if (plan.n_a == 0) {
        plan.feasible = false;
      } else {
        auto keep_b = static_cast<std::size_t>(std::llround(na / plan.target_ratio));
        if (keep_b == 0) {
          keep_b = 1;
          plan.feasible = false;
        }
        plan.remove_b = plan.n_b - std::min(keep_b, plan.n_b);
      }
      plan.remove_a = damped(plan.remove_a, options.step_fraction);
      plan.remove_b = damped(plan.remove_b, options.step_fraction);
      ++planned_buckets;
      if (plan.feasible) {
        ++feasible_buckets;
      } else {
        diagnostic << " [" << lo << "," << bm.hi << "] a=" << plan.n_a << " b=" << plan.n_b
                   << " target=" << plan.target_ratio << ";";
      }

      std::shuffle(bm.a.begin(), bm.a.end(), rng);
      std::shuffle(bm.b.begin(), bm.b.end(), rng);
      removed.insert(removed.end(), bm.a.begin(), bm.a.begin() + static_cast<std::ptrdiff_t>(plan.remove_a));
      removed.insert(removed.end(), bm.b.begin(), bm.b.begin() + static_cast<std::ptrdiff_t>(plan.remove_b));
      if (plan.remove_a > 0 || plan.remove_b > 0 || !plan.feasible) report.buckets.push_back(plan);
    }
    if (round == 1 && planned_buckets > 0 && feasible_buckets == 0)
      throw Error("target slope " + std::to_string(target_slope) + " unreachable in every bucket:" +
                  diagnostic.str());
    if (removed.empty()) break;

    std::sort(removed.begin(), removed.end());
    std::vector<NodeId> keep;
    keep.reserve(work.graph.node_count() - removed.size());
    for (NodeId n = 0; n < work.graph.node_count(); ++n)
      if (!std::binary_search(removed.begin(), removed.end(), n)) keep.push_back(n);
    LabelTable next_labels = work.labels.restricted(keep);
    Graph next_graph = induced_subgraph(work.graph, keep);
    try {
      current = degree_ratio_curve(next_graph, next_labels, group_a, group_b, options.bucketing);
    } catch (const Error&) {
      break;  // a group vanished
    }
    std::vector<NodeId> kept;
    kept.reserve(keep.size());
    for (NodeId n : keep) kept.push_back(work.kept[n]);
    work.graph = std::move(next_graph);
    work.labels = std::move(next_labels);
    work.kept = std::move(kept);

    const double distance = std::abs(current.fitted_slope - target_slope);
    if (distance < best_distance) {
      best_distance = distance;
      stale_rounds = 0;
      result.graph = work.graph;
      result.labels = work.labels;
      result.kept = work.kept;
      report.rounds = round;
    } else {
      ++stale_rounds;
    }
  }
  std::erase_if(report.buckets, [&](const BucketPlan& b) { return b.round > report.rounds && b.feasible; });
  for (auto& b : report.buckets)
    if (b.round > report.rounds) b.remove_a = b.remove_b = 0;
  report.removed_nodes = graph.node_count() - result.graph.node_count();

  result.achieved = degree_ratio_curve(result.graph, result.labels, group_a, group_b, options.bucketing);
  report.achieved_slope = result.achieved.fitted_slope;
  report.within_tolerance = std::abs(report.achieved_slope - target_slope) <= report.tolerance;
  return result;
}

}  // namespace clan
