#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "clan/dataset.hpp"
#include "clan/error.hpp"
#include "clan/evaluation.hpp"
#include "clan/fixtures.hpp"
#include "clan/louvain.hpp"
#include "clan/pipeline.hpp"
#include "clan/sbm.hpp"
#include "clan/skew.hpp"

namespace py = pybind11;

namespace {

using WeightedEdge = std::tuple<std::string, std::string, double>;

clan::Graph graph_from_edges(const std::vector<WeightedEdge>& edges, const std::vector<std::string>& nodes,
                             bool unweighted) {
  clan::GraphBuilder builder;
  for (const auto& id : nodes) builder.add_node(id);
  for (const auto& [u, v, w] : edges) builder.add_edge(builder.add_node(u), builder.add_node(v), w);
  return std::move(builder).build(unweighted);
}

std::vector<WeightedEdge> edges_of(const clan::Graph& g) {
  std::vector<WeightedEdge> out;
  for (const auto& e : g.edges()) out.emplace_back(g.external_id(e.u), g.external_id(e.v), e.weight);
  return out;
}

std::vector<std::vector<std::string>> token_rows(const clan::AttributeTable& t) {
  std::vector<std::vector<std::string>> out;
  for (clan::NodeId n = 0; n < t.node_count(); ++n) {
    auto row = t.tokens(n);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

clan::LabelTable labels_from(const std::vector<std::optional<std::string>>& labels) {
  clan::LabelTable table(labels.size());
  for (std::size_t n = 0; n < labels.size(); ++n)
    if (labels[n]) table.set(static_cast<clan::NodeId>(n), *labels[n]);
  return table;
}

std::vector<std::optional<std::string>> labels_of(const clan::LabelTable& t) {
  std::vector<std::optional<std::string>> out;
  for (clan::NodeId n = 0; n < t.node_count(); ++n) out.push_back(t.label_of(n));
  return out;
}

std::vector<clan::CommunityId> to_list(const clan::Partition& p) { return {p.assignment().begin(), p.assignment().end()}; }

py::dict curve_dict(const clan::RatioCurve& c) {
  py::list points;
  for (const auto& p : c.points) {
    py::dict d;
    d["degree_lo"] = p.degree_lo;
    d["degree_hi"] = p.degree_hi;
    d["midpoint"] = p.midpoint;
    d["n_a"] = p.n_a;
    d["n_b"] = p.n_b;
    d["ratio"] = p.ratio;
    points.append(d);
  }
  py::dict out;
  out["group_a"] = c.group_a;
  out["group_b"] = c.group_b;
  out["fitted_slope"] = c.fitted_slope;
  out["fitted_intercept"] = c.fitted_intercept;
  out["points"] = points;
  return out;
}

}  // namespace

PYBIND11_MODULE(_clan, m) {
  m.doc() = "Python bindings for the clan community detection library";

  py::register_exception<clan::Error>(m, "ClanError", PyExc_ValueError);

  py::class_<clan::Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("edges"), py::arg("nodes") = std::vector<std::string>{},
           py::arg("unweighted") = false,
           "Build from (src, dst, weight) triples; `nodes` adds ids (e.g. isolated ones) first.")
      .def_property_readonly("node_count", &clan::Graph::node_count)
      .def_property_readonly("edge_count", &clan::Graph::edge_count)
      .def_property_readonly("total_weight_2m", &clan::Graph::total_weight_2m)
      .def_property_readonly("external_ids",
                             [](const clan::Graph& g) {
                               return std::vector<std::string>(g.external_ids().begin(), g.external_ids().end());
                             })
      .def("edges", &edges_of)
      .def("degree", &clan::Graph::degree)
      .def("weighted_degree", &clan::Graph::weighted_degree)
      .def("find", &clan::Graph::find)
      .def("__repr__", [](const clan::Graph& g) {
        return "<clan.Graph nodes=" + std::to_string(g.node_count()) + " edges=" + std::to_string(g.edge_count()) +
               ">";
      });

  py::class_<clan::AttributeTable>(m, "AttributeTable")
      .def(py::init<std::vector<std::vector<std::string>>>(), py::arg("tokens"))
      .def_property_readonly("node_count", &clan::AttributeTable::node_count)
      .def("tokens",
           [](const clan::AttributeTable& t, clan::NodeId n) {
             auto row = t.tokens(n);
             return std::vector<std::string>(row.begin(), row.end());
           })
      .def("rows", &token_rows)
      .def_property_readonly("vocabulary", [](const clan::AttributeTable& t) {
        return std::vector<std::string>(t.vocabulary().begin(), t.vocabulary().end());
      });

  m.def("tokenize", &clan::tokenize, py::arg("text"));
  m.def(
      "load_edge_list",
      [](const std::filesystem::path& p, bool unweighted) { return clan::load_edge_list(p, {unweighted}); },
      py::arg("path"), py::arg("unweighted") = false);
  m.def("load_attributes", &clan::load_attributes, py::arg("path"), py::arg("graph"),
        "Reads JSON-lines attributes; unknown ids are added to `graph`.");
  m.def(
      "load_labels",
      [](const std::filesystem::path& p, const clan::Graph& g) { return labels_of(clan::load_labels(p, g)); },
      py::arg("path"), py::arg("graph"));

  m.def(
      "modularity",
      [](const clan::Graph& g, std::vector<clan::CommunityId> assignment) {
        return clan::modularity(g, clan::Partition(std::move(assignment)));
      },
      py::arg("graph"), py::arg("assignment"));
  m.def(
      "louvain",
      [](const clan::Graph& g, std::uint64_t seed, double min_gain, int max_levels, bool deterministic_order) {
        clan::LouvainConfig c{seed, min_gain, max_levels, deterministic_order};
        return to_list(clan::louvain(g, c));
      },
      py::arg("graph"), py::arg("seed") = 42, py::arg("min_gain") = 1e-7, py::arg("max_levels") = 32,
      py::arg("deterministic_order") = true, py::call_guard<py::gil_scoped_release>());

  m.def("default_threshold", &clan::default_threshold, py::arg("node_count"));
  m.def(
      "run_clan",
      [](const clan::Graph& g, const clan::AttributeTable& attrs, std::optional<std::size_t> threshold,
         std::uint64_t seed, double alpha) {
        clan::LouvainConfig c;
        c.seed = seed;
        const auto result =
            clan::run_clan(g, attrs, threshold.value_or(clan::default_threshold(g.node_count())), c, alpha);
        py::list moves;
        for (const auto& r : result.reassigned) moves.append(py::make_tuple(r.node, r.from, r.to, r.posterior));
        py::dict out;
        out["step1"] = to_list(result.step1_partition);
        out["final"] = to_list(result.final_partition);
        out["significant"] = result.split.significant;
        out["minority"] = result.split.minority;
        out["reassigned"] = moves;
        return out;
      },
      py::arg("graph"), py::arg("attributes"), py::arg("threshold") = std::nullopt, py::arg("seed") = 42,
      py::arg("alpha") = 1.0);

  m.def(
      "pairwise_f1",
      [](std::vector<clan::NodeId> detected, std::vector<clan::NodeId> truth) {
        return clan::pairwise_f1(detected, truth);
      },
      py::arg("detected"), py::arg("truth"), "Both inputs must be sorted and unique.");
  m.def(
      "pairwise_jaccard",
      [](std::vector<clan::NodeId> detected, std::vector<clan::NodeId> truth) {
        return clan::pairwise_jaccard(detected, truth);
      },
      py::arg("detected"), py::arg("truth"));
  m.def(
      "averaged_scores",
      [](const clan::PartialAssignment& detected, const std::vector<std::optional<std::string>>& truth) {
        const auto r = clan::averaged_scores(detected, labels_from(truth));
        py::dict out;
        out["avg_f1"] = r.avg_f1;
        out["avg_jaccard"] = r.avg_jaccard;
        out["evaluated_nodes"] = r.evaluated_nodes;
        out["matching"] = r.matching();
        return out;
      },
      py::arg("detected"), py::arg("truth"));
  m.def("unlabeled_fraction", &clan::unlabeled_fraction, py::arg("node_count"), py::arg("assignment"));

  m.def(
      "generate_sbm",
      [](std::vector<std::size_t> block_sizes, double p_in, double p_out, std::size_t tokens_per_node,
         std::size_t vocab_per_block, double token_overlap, double degree_label_correlation, std::uint64_t seed) {
        clan::SbmSpec spec{std::move(block_sizes), p_in, p_out, tokens_per_node, vocab_per_block,
                           token_overlap, degree_label_correlation, seed};
        auto data = clan::generate_attributed_sbm(spec);
        return py::make_tuple(std::move(data.graph), std::move(data.attributes), labels_of(data.labels));
      },
      py::arg("block_sizes"), py::arg("p_in"), py::arg("p_out"), py::arg("tokens_per_node") = 10,
      py::arg("vocab_per_block") = 20, py::arg("token_overlap") = 0.0, py::arg("degree_label_correlation") = 0.0,
      py::arg("seed") = 42);

  m.def(
      "degree_ratio_curve",
      [](const clan::Graph& g, const std::vector<std::optional<std::string>>& labels, const std::string& a,
         const std::string& b, const std::string& bucketing) {
        return curve_dict(clan::degree_ratio_curve(g, labels_from(labels), a, b, clan::parse_bucketing(bucketing)));
      },
      py::arg("graph"), py::arg("labels"), py::arg("group_a"), py::arg("group_b"), py::arg("bucketing") = "log2");
  m.def(
      "subsample_to_slope",
      [](const clan::Graph& g, const std::vector<std::optional<std::string>>& labels, const std::string& a,
         const std::string& b, double slope, std::uint64_t seed, const std::string& bucketing) {
        clan::SubsampleOptions opts;
        opts.bucketing = clan::parse_bucketing(bucketing);
        auto r = clan::subsample_to_slope(g, labels_from(labels), a, b, slope, seed, opts);
        py::dict out;
        out["kept"] = r.kept;
        out["labels"] = labels_of(r.labels);
        out["curve"] = curve_dict(r.achieved);
        out["removed_nodes"] = r.report.removed_nodes;
        out["achieved_slope"] = r.report.achieved_slope;
        out["graph"] = std::move(r.graph);
        return out;
      },
      py::arg("graph"), py::arg("labels"), py::arg("group_a"), py::arg("group_b"), py::arg("target_slope"),
      py::arg("seed") = 42, py::arg("bucketing") = "log2");

  auto fx = m.def_submodule("fixtures", "Embedded datasets");
  fx.def("two_triangles", &clan::fixtures::two_triangles);
  fx.def("karate_club", &clan::fixtures::karate_club);
}
