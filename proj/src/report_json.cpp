#include "clan/report_json.hpp"

#include <ostream>

#include "clan/error.hpp"

namespace clan {

Json to_json(const TokenAudit& audit) {
  Json j;
  j["count"] = audit.discarded_count;
  j["pct"] = audit.discarded_pct;
  j["examples"] = audit.examples;
  j["vocabulary_size"] = audit.vocabulary_size;
  j["hashtags_only"] = audit.hashtags_only;
  return j;
}

Json to_json(const MetricReport& report) {
  Json j;
  j["avg_f1"] = report.scores.avg_f1;
  j["avg_jaccard"] = report.scores.avg_jaccard;
  j["unlabeled_pct"] = report.unlabeled_pct;
  j["q_final"] = report.q_final ? Json(*report.q_final) : Json(nullptr);
  j["discarded_tokens"] = report.discarded_tokens ? to_json(*report.discarded_tokens) : Json(nullptr);
  Json per = Json::array();
  for (const auto& c : report.scores.per_community) {
    Json row;
    row["community"] = c.community;
    row["best_truth"] = c.best_truth;
    row["labeled_members"] = c.labeled_members;
    row["f1"] = c.f1;
    row["jaccard"] = c.jaccard;
    per.push_back(std::move(row));
  }
  j["per_community"] = std::move(per);
  j["evaluated_nodes"] = report.scores.evaluated_nodes;
  j["averaging"] = "symmetric_best_match";
  return j;
}

Json to_json(const RatioCurve& curve) {
  Json j;
  j["group_a"] = curve.group_a;
  j["group_b"] = curve.group_b;
  j["bucketing"] = to_string(curve.bucketing);
  j["fitted_slope"] = curve.fitted_slope;
  j["fitted_intercept"] = curve.fitted_intercept;
  j["fitted_points"] = curve.fitted_points;
  Json pts = Json::array();
  for (const auto& p : curve.points) {
    Json row;
    row["degree_lo"] = p.degree_lo;
    row["degree_hi"] = p.degree_hi;
    row["midpoint"] = p.midpoint;
    row["n_a"] = p.n_a;
    row["n_b"] = p.n_b;
    row["ratio"] = p.ratio ? Json(*p.ratio) : Json(nullptr);
    row["excluded"] = !p.ratio.has_value();
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  return j;
}

Json to_json(const SubsampleReport& report) {
  Json j;
  j["target_slope"] = report.target_slope;
  j["input_slope"] = report.input_slope;
  j["achieved_slope"] = report.achieved_slope;
  j["tolerance"] = report.tolerance;
  j["within_tolerance"] = report.within_tolerance;
  j["rounds"] = report.rounds;
  j["removed_nodes"] = report.removed_nodes;
  Json buckets = Json::array();
  for (const auto& b : report.buckets) {
    Json row;
    row["round"] = b.round;
    row["midpoint"] = b.midpoint;
    row["target_ratio"] = b.target_ratio;
    row["n_a"] = b.n_a;
    row["n_b"] = b.n_b;
    row["remove_a"] = b.remove_a;
    row["remove_b"] = b.remove_b;
    row["feasible"] = b.feasible;
    buckets.push_back(std::move(row));
  }
  j["buckets"] = std::move(buckets);
  return j;
}

Json to_json(const SbmSpec& spec) {
  Json j;
  j["block_sizes"] = spec.block_sizes;
  j["p_in"] = spec.p_in;
  j["p_out"] = spec.p_out;
  j["tokens_per_node"] = spec.tokens_per_node;
  j["vocab_per_block"] = spec.vocab_per_block;
  j["token_overlap"] = spec.token_overlap;
  j["degree_label_correlation"] = spec.degree_label_correlation;
  j["seed"] = spec.seed;
  return j;
}

SbmSpec sbm_spec_from_json(const Json& json, std::uint64_t default_seed) {
  if (!json.is_object()) throw Error("sbm spec must be a JSON object");
  SbmSpec spec;
  spec.seed = default_seed;
  try {
    if (!json.contains("block_sizes")) throw Error("sbm spec is missing \"block_sizes\"");
    spec.block_sizes = json.at("block_sizes").get<std::vector<std::size_t>>();
    spec.p_in = json.value("p_in", spec.p_in);
    spec.p_out = json.value("p_out", spec.p_out);
    spec.tokens_per_node = json.value("tokens_per_node", spec.tokens_per_node);
    spec.vocab_per_block = json.value("vocab_per_block", spec.vocab_per_block);
    spec.token_overlap = json.value("token_overlap", spec.token_overlap);
    spec.degree_label_correlation = json.value("degree_label_correlation", spec.degree_label_correlation);
    spec.seed = json.value("seed", spec.seed);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid sbm spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

void write_curve_tsv(std::ostream& out, const RatioCurve& curve) {
  out << "midpoint\tratio\n";
  for (const auto& p : curve.points)
    if (p.ratio) out << Json(p.midpoint).dump() << '\t' << Json(*p.ratio).dump() << '\n';
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace clan
