#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clan/skew.hpp"

namespace clan {

/// Resolved command-line configuration shared by every subcommand.
struct RunConfig {
  std::optional<std::filesystem::path> edges;
  std::optional<std::filesystem::path> attrs;
  std::optional<std::filesystem::path> labels;
  /// communities.json written by `detect`; input to evaluate and audit.
  std::optional<std::filesystem::path> communities;
  /// SBM spec JSON for `generate`.
  std::optional<std::filesystem::path> spec;
  /// Defaults to max(10, ceil(node_count / 100)).
  std::optional<std::size_t> threshold;
  double alpha = 1.0;
  std::uint64_t seed = 42;
  std::string method = "clan";
  std::filesystem::path out_dir = ".";
  std::string format = "dot";
  bool hashtags_only = false;
  std::vector<double> slopes;
  bool unweighted = false;
  Bucketing bucketing = Bucketing::kLog2;
  /// Groups compared by the degree-ratio statistic; defaults to the two most
  /// frequent labels.
  std::optional<std::pair<std::string, std::string>> groups;
};

/// Each command either writes all of its outputs into config.out_dir or
/// throws clan::Error and writes nothing.
void cmd_detect(const RunConfig& config);
void cmd_evaluate(const RunConfig& config);
void cmd_audit(const RunConfig& config);
void cmd_skew(const RunConfig& config);
void cmd_generate(const RunConfig& config);

}  // namespace clan
