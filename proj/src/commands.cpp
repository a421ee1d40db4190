#include "clan/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "clan/dataset.hpp"
#include "clan/error.hpp"
#include "clan/evaluation.hpp"
#include "clan/export.hpp"
#include "clan/louvain.hpp"
#include "clan/pipeline.hpp"
#include "clan/report_json.hpp"
#include "clan/sbm.hpp"

namespace fs = std::filesystem;

namespace clan {
namespace {

/// Files are buffered in memory and only written by commit(), so a failing
/// command leaves no partial output behind.
class OutputSet {
 public:
  explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}

  void add(const fs::path& relative, std::string content) { files_.emplace_back(relative, std::move(content)); }

  void commit() {
    std::vector<fs::path> written;
    try {
      for (const auto& [rel, content] : files_) {
        const fs::path target = dir_ / rel;
        fs::create_directories(target.parent_path());
        const fs::path tmp = target.string() + ".tmp";
        {
          std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
          if (!out) throw Error("cannot write " + tmp.string());
          out << content;
          if (!out.flush()) throw Error("cannot write " + tmp.string());
        }
        fs::rename(tmp, target);
        written.push_back(target);
      }
    } catch (...) {
      std::error_code ec;
      for (const auto& p : written) fs::remove(p, ec);
      throw;
    }
  }

 private:
  fs::path dir_;
  std::vector<std::pair<fs::path, std::string>> files_;
};

const fs::path& require(const std::optional<fs::path>& path, const char* flag) {
  if (!path) throw Error(std::string("missing required option ") + flag);
  return *path;
}

void check_common(const RunConfig& config) {
  if (config.method != "clan" && config.method != "louvain")
    throw Error("--method must be clan or louvain, got '" + config.method + "'");
  if (config.format != "json" && config.format != "dot" && config.format != "gexf" && config.format != "tsv")
    throw Error("--format must be json, dot, gexf or tsv, got '" + config.format + "'");
  if (!(config.alpha > 0.0)) throw Error("--alpha must be positive");
  if (config.threshold && *config.threshold < 1) throw Error("--threshold must be at least 1");
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), 0, std::string("invalid JSON: ") + e.what());
  }
}

template <typename Write>
std::string render(Write&& write) {
  std::ostringstream out;
  write(out);
  return out.str();
}

/// Graph export in the requested format; `json` exports nothing.
void add_graph_export(OutputSet& outputs, const std::string& basename, const std::string& format, const Graph& graph,
                      const std::vector<NodeColumn>& columns) {
  if (format == "dot") {
    outputs.add(basename + ".dot", render([&](std::ostream& o) { write_dot(o, graph, columns); }));
  } else if (format == "gexf") {
    outputs.add(basename + ".gexf", render([&](std::ostream& o) { write_gexf(o, graph, columns); }));
  } else if (format == "tsv") {
    outputs.add(basename + ".tsv", render([&](std::ostream& o) { write_node_table(o, graph, columns); }));
  }
}

Json path_or_null(const std::optional<fs::path>& p) { return p ? Json(p->generic_string()) : Json(nullptr); }

Json assignment_json(const Graph& graph, const Partition& partition) {
  Json j = Json::object();
  for (NodeId n = 0; n < graph.node_count(); ++n) j[graph.external_id(n)] = partition.community_of(n);
  return j;
}

/// Community assignment read back from communities.json.
struct StoredCommunities {
  std::vector<std::pair<std::string, CommunityId>> assignment;
  std::vector<CommunityId> significant;
};

StoredCommunities read_communities(const fs::path& path) {
  const Json j = read_json_file(path);
  StoredCommunities out;
  try {
    for (const auto& [id, c] : j.at("communities").items()) out.assignment.emplace_back(id, c.get<CommunityId>());
    out.significant = j.at("significant_communities").get<std::vector<CommunityId>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), 0, std::string("malformed communities file: ") + e.what());
  }
  std::sort(out.significant.begin(), out.significant.end());
  return out;
}

/// Full assignment plus its significant-only view. Every stored id must
/// already be a node; throws if some graph node has no stored community.
std::pair<Partition, PartialAssignment> bind_communities(const Graph& graph, const StoredCommunities& stored,
                                                         const fs::path& source) {
  std::vector<std::optional<CommunityId>> full(graph.node_count());
  for (const auto& [id, c] : stored.assignment) full[*graph.find(id)] = c;
  std::vector<CommunityId> total(graph.node_count());
  PartialAssignment partial(graph.node_count());
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    if (!full[n])
      throw Error("node '" + graph.external_id(n) + "' has no community in " + source.generic_string());
    total[n] = *full[n];
    if (std::binary_search(stored.significant.begin(), stored.significant.end(), *full[n])) partial[n] = *full[n];
  }
  return {Partition(std::move(total)), std::move(partial)};
}

std::optional<double> modularity_if_defined(const Graph& graph, const Partition& partition) {
  if (!(graph.total_weight_2m() > 0.0)) return std::nullopt;
  return modularity(graph, partition);
}

std::pair<std::string, std::string> default_groups(const LabelTable& labels) {
  std::map<std::string, std::size_t> freq;
  for (NodeId n = 0; n < labels.node_count(); ++n)
    if (const auto& l = labels.label_of(n)) ++freq[*l];
  if (freq.size() < 2) throw Error("the degree-ratio statistic needs at least two label groups");
  std::vector<std::pair<std::string, std::size_t>> ranked(freq.begin(), freq.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return {ranked[0].first, ranked[1].first};
}

Json score_summary(const MetricReport& r) {
  Json j;
  j["avg_f1"] = r.scores.avg_f1;
  j["avg_jaccard"] = r.scores.avg_jaccard;
  j["unlabeled_pct"] = r.unlabeled_pct;
  return j;
}

MetricReport metric_report(const Graph& graph, const Partition& partition, const PartialAssignment& assignment,
                           const LabelTable& labels, const AttributeTable& attrs) {
  MetricReport report;
  report.scores = averaged_scores(assignment, labels);
  report.unlabeled_pct = unlabeled_fraction(graph.node_count(), assignment);
  report.q_final = modularity_if_defined(graph, partition);
  report.discarded_tokens = discarded_token_audit(attrs, assignment);
  return report;
}

}  // namespace

void cmd_detect(const RunConfig& config) {
  check_common(config);
  const fs::path& edges = require(config.edges, "--edges");
  if (config.method == "clan") require(config.attrs, "--attrs (required with --method clan)");

  Graph graph = load_edge_list(edges, {config.unweighted});
  AttributeTable attrs = config.attrs ? load_attributes(*config.attrs, graph) : AttributeTable{};
  const std::size_t threshold = config.threshold.value_or(default_threshold(graph.node_count()));

  LouvainConfig louvain_config;
  louvain_config.seed = config.seed;
  const Partition step1 = louvain(graph, louvain_config);

  Partition final_partition = step1;
  ThresholdSplit split;
  std::vector<Reassignment> reassigned;
  if (config.method == "clan") {
    ClanResult result = reassign_minority(attrs, step1, threshold, config.alpha);
    final_partition = std::move(result.final_partition);
    split = std::move(result.split);
    reassigned = std::move(result.reassigned);
  } else {
    split = split_by_threshold_lenient(step1, threshold);
  }
  const PartialAssignment assignment = significant_assignment(final_partition, split);

  Json communities;
  communities["method"] = config.method;
  communities["seed"] = config.seed;
  communities["threshold"] = threshold;
  communities["node_count"] = graph.node_count();
  communities["significant_communities"] = split.significant;
  communities["communities"] = assignment_json(graph, final_partition);
  communities["step1"] = assignment_json(graph, step1);
  Json moves = Json::array();
  for (const auto& r : reassigned) {
    Json row;
    row["id"] = graph.external_id(r.node);
    row["from"] = r.from;
    row["to"] = r.to;
    row["posterior"] = r.posterior;
    moves.push_back(std::move(row));
  }
  communities["reassigned"] = std::move(moves);

  Json report;
  report["command"] = "detect";
  report["method"] = config.method;
  report["seed"] = config.seed;
  report["threshold"] = threshold;
  report["alpha"] = config.alpha;
  report["unweighted"] = config.unweighted;
  report["edges"] = path_or_null(config.edges);
  report["attrs"] = path_or_null(config.attrs);
  report["node_count"] = graph.node_count();
  report["edge_count"] = graph.edge_count();
  report["q_step1"] = modularity(graph, step1);
  report["q_final"] = modularity(graph, final_partition);
  report["community_count_step1"] = step1.community_count();
  report["significant_count"] = split.significant.size();
  report["reassigned_count"] = reassigned.size();
  report["unlabeled_pct"] = unlabeled_fraction(graph.node_count(), assignment);

  std::vector<NodeColumn> columns{{"community", {}}, {"step1", {}}};
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    columns[0].values.push_back(assignment[n] ? std::to_string(*assignment[n]) : std::string());
    columns[1].values.push_back(std::to_string(step1.community_of(n)));
  }

  OutputSet outputs(config.out_dir);
  outputs.add("communities.json", dump(communities));
  outputs.add("report.json", dump(report));
  add_graph_export(outputs, "graph", config.format, graph, columns);
  outputs.commit();
}

void cmd_evaluate(const RunConfig& config) {
  check_common(config);
  const fs::path& edges = require(config.edges, "--edges");
  const fs::path& communities_path = require(config.communities, "--communities");
  const fs::path& labels_path = require(config.labels, "--labels");

  Graph graph = load_edge_list(edges, {config.unweighted});
  const StoredCommunities stored = read_communities(communities_path);
  for (const auto& [id, c] : stored.assignment) graph.add_isolated_node(id);
  std::optional<AttributeTable> attrs;
  if (config.attrs) attrs = load_attributes(*config.attrs, graph);
  auto [partition, assignment] = bind_communities(graph, stored, communities_path);
  const LabelTable labels = load_labels(labels_path, graph);

  MetricReport report;
  report.scores = averaged_scores(assignment, labels);
  report.unlabeled_pct = unlabeled_fraction(graph.node_count(), assignment);
  report.q_final = modularity_if_defined(graph, partition);
  if (attrs) report.discarded_tokens = discarded_token_audit(*attrs, assignment, {config.hashtags_only});

  const auto matching = report.scores.matching();
  const auto coloring = agreement_coloring(assignment, labels, matching);
  std::vector<NodeColumn> columns{{"community", {}}, {"truth", {}}, {"agreement", {}}, {"color", {}}};
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    columns[0].values.push_back(assignment[n] ? std::to_string(*assignment[n]) : std::string());
    columns[1].values.push_back(labels.label_of(n).value_or(""));
    columns[2].values.push_back(coloring[n] ? to_string(*coloring[n]) : "");
    columns[3].values.push_back(!coloring[n] ? "" : *coloring[n] == Agreement::kAgree ? "green" : "red");
  }

  OutputSet outputs(config.out_dir);
  outputs.add("report.json", dump(to_json(report)));
  add_graph_export(outputs, "agreement", config.format, graph, columns);
  outputs.commit();
}

void cmd_audit(const RunConfig& config) {
  check_common(config);
  const fs::path& attrs_path = require(config.attrs, "--attrs");
  const fs::path& communities_path = require(config.communities, "--communities");

  Graph graph = config.edges ? load_edge_list(*config.edges, {config.unweighted}) : Graph{};
  const StoredCommunities stored = read_communities(communities_path);
  for (const auto& [id, c] : stored.assignment) graph.add_isolated_node(id);
  const AttributeTable attrs = load_attributes(attrs_path, graph);

  PartialAssignment assignment(graph.node_count());
  for (const auto& [id, c] : stored.assignment)
    if (std::binary_search(stored.significant.begin(), stored.significant.end(), c)) assignment[*graph.find(id)] = c;

  Json out = to_json(discarded_token_audit(attrs, assignment, {config.hashtags_only}));
  OutputSet outputs(config.out_dir);
  outputs.add("audit.json", dump(out));
  outputs.commit();
}

void cmd_skew(const RunConfig& config) {
  check_common(config);
  const fs::path& edges = require(config.edges, "--edges");
  const fs::path& attrs_path = require(config.attrs, "--attrs");
  const fs::path& labels_path = require(config.labels, "--labels");
  if (config.slopes.empty()) throw Error("missing required option --slopes");

  Graph graph = load_edge_list(edges, {config.unweighted});
  const AttributeTable attrs = load_attributes(attrs_path, graph);
  const LabelTable labels = load_labels(labels_path, graph);
  const auto [group_a, group_b] = config.groups.value_or(default_groups(labels));
  const std::size_t threshold = config.threshold.value_or(default_threshold(graph.node_count()));
  const RatioCurve input_curve = degree_ratio_curve(graph, labels, group_a, group_b, config.bucketing);

  LouvainConfig louvain_config;
  louvain_config.seed = config.seed;
  SubsampleOptions options;
  options.bucketing = config.bucketing;

  OutputSet outputs(config.out_dir);
  Json cells = Json::array();
  for (std::size_t i = 0; i < config.slopes.size(); ++i) {
    const double slope = config.slopes[i];
    const std::string dir = "slope_" + std::to_string(i);
    Json cell;
    cell["index"] = i;
    cell["slope"] = slope;
    cell["directory"] = dir;
    try {
      const SubsampleResult sub = subsample_to_slope(graph, labels, group_a, group_b, slope, config.seed, options);
      const AttributeTable sub_attrs = attrs.restricted(sub.kept);
      const Partition step1 = louvain(sub.graph, louvain_config);

      const ThresholdSplit louvain_split = split_by_threshold_lenient(step1, threshold);
      const MetricReport louvain_report =
          metric_report(sub.graph, step1, significant_assignment(step1, louvain_split), sub.labels, sub_attrs);
      const ClanResult clan = reassign_minority(sub_attrs, step1, threshold, config.alpha);
      const MetricReport clan_report =
          metric_report(sub.graph, clan.final_partition, to_partial(clan.final_partition), sub.labels, sub_attrs);

      Json curve = to_json(sub.achieved);
      curve["subsample"] = to_json(sub.report);
      outputs.add(fs::path(dir) / "edges.tsv", render([&](std::ostream& o) { write_edge_list(o, sub.graph); }));
      outputs.add(fs::path(dir) / "attrs.jsonl",
                  render([&](std::ostream& o) { write_attributes(o, sub.graph, sub_attrs); }));
      outputs.add(fs::path(dir) / "labels.csv", render([&](std::ostream& o) { write_labels(o, sub.graph, sub.labels); }));
      outputs.add(fs::path(dir) / "curve.tsv", render([&](std::ostream& o) { write_curve_tsv(o, sub.achieved); }));
      outputs.add(fs::path(dir) / "curve.json", dump(curve));
      outputs.add(fs::path(dir) / "louvain" / "report.json", dump(to_json(louvain_report)));
      outputs.add(fs::path(dir) / "clan" / "report.json", dump(to_json(clan_report)));

      cell["status"] = "ok";
      cell["node_count"] = sub.graph.node_count();
      cell["removed_nodes"] = sub.report.removed_nodes;
      cell["achieved_slope"] = sub.report.achieved_slope;
      cell["within_tolerance"] = sub.report.within_tolerance;
      cell["louvain"] = score_summary(louvain_report);
      cell["clan"] = score_summary(clan_report);
    } catch (const Error& e) {
      cell["status"] = "failed";
      cell["error"] = e.what();
    }
    cells.push_back(std::move(cell));
  }

  Json summary;
  summary["command"] = "skew";
  summary["seed"] = config.seed;
  summary["threshold"] = threshold;
  summary["alpha"] = config.alpha;
  summary["bucketing"] = to_string(config.bucketing);
  summary["groups"] = {group_a, group_b};
  summary["input_slope"] = input_curve.fitted_slope;
  summary["cells"] = std::move(cells);
  outputs.add("summary.json", dump(summary));
  outputs.add("input_curve.tsv", render([&](std::ostream& o) { write_curve_tsv(o, input_curve); }));
  outputs.commit();
}

void cmd_generate(const RunConfig& config) {
  const fs::path& spec_path = require(config.spec, "--spec");
  const SbmSpec spec = sbm_spec_from_json(read_json_file(spec_path), config.seed);
  const AttributedGraph data = generate_attributed_sbm(spec);

  OutputSet outputs(config.out_dir);
  outputs.add("edges.tsv", render([&](std::ostream& o) { write_edge_list(o, data.graph); }));
  outputs.add("attrs.jsonl", render([&](std::ostream& o) { write_attributes(o, data.graph, data.attributes); }));
  outputs.add("labels.csv", render([&](std::ostream& o) { write_labels(o, data.graph, data.labels); }));
  outputs.add("spec-echo.json", dump(to_json(spec)));
  outputs.commit();
}

}  // namespace clan
