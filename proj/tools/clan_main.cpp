#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clan/commands.hpp"
#include "clan/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Community detection with attribute-based reassignment of lowly-connected nodes"};
  app.set_help_all_flag("--help-all");

  clan::RunConfig config;
  std::string command;
  std::string edges, attrs, labels, communities, spec, out = ".", bucketing = "log2", groups;
  std::size_t threshold = 0;

  app.add_option("command", command, "detect | evaluate | audit | skew | generate")
      ->required()
      ->check(CLI::IsMember({"detect", "evaluate", "audit", "skew", "generate"}));
  app.add_option("--edges", edges, "Edge list, src<TAB>dst[<TAB>weight]");
  app.add_option("--attrs", attrs, "Node attributes, JSON lines");
  app.add_option("--labels", labels, "Ground truth, id,label CSV");
  app.add_option("--communities", communities, "communities.json written by detect");
  app.add_option("--spec", spec, "SBM spec JSON for generate");
  auto* threshold_opt = app.add_option("--threshold", threshold, "Significant communities have more members than this")
                            ->check(CLI::PositiveNumber);
  app.add_option("--alpha", config.alpha, "Naive Bayes smoothing")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Random seed")->envname("CLAN_SEED");
  app.add_option("--method", config.method, "clan | louvain")->check(CLI::IsMember({"clan", "louvain"}));
  app.add_option("--out", out, "Output directory");
  app.add_option("--format", config.format, "json | dot | gexf | tsv")
      ->check(CLI::IsMember({"json", "dot", "gexf", "tsv"}));
  app.add_flag("--hashtags-only", config.hashtags_only, "Restrict the token audit to '#' tokens");
  app.add_option("--slopes", config.slopes, "Comma-separated target slopes for skew")->delimiter(',');
  app.add_flag("--unweighted", config.unweighted, "Ignore weights and edge multiplicities");
  app.add_option("--bucketing", bucketing, "Degree buckets for skew: unit | log2")
      ->check(CLI::IsMember({"unit", "log2"}));
  app.add_option("--groups", groups, "Two labels A,B compared by the degree-ratio statistic");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!edges.empty()) config.edges = edges;
    if (!attrs.empty()) config.attrs = attrs;
    if (!labels.empty()) config.labels = labels;
    if (!communities.empty()) config.communities = communities;
    if (!spec.empty()) config.spec = spec;
    if (threshold_opt->count() > 0) config.threshold = threshold;
    config.out_dir = out;
    config.bucketing = clan::parse_bucketing(bucketing);
    if (!groups.empty()) {
      const auto comma = groups.find(',');
      if (comma == std::string::npos || comma == 0 || comma + 1 == groups.size())
        throw clan::Error("--groups expects two labels separated by a comma");
      config.groups = std::make_pair(groups.substr(0, comma), groups.substr(comma + 1));
    }

    if (command == "detect") {
      clan::cmd_detect(config);
    } else if (command == "evaluate") {
      clan::cmd_evaluate(config);
    } else if (command == "audit") {
      clan::cmd_audit(config);
    } else if (command == "skew") {
      clan::cmd_skew(config);
    } else {
      clan::cmd_generate(config);
    }
  } catch (const std::exception& e) {
    std::cerr << "clan " << command << ": " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
