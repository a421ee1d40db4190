#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "clan/dataset.hpp"
#include "clan/error.hpp"
#include "clan/graph.hpp"

namespace {

using clan::Edge;
using clan::Graph;

Graph parse(const std::string& text, bool unweighted = false) {
  std::istringstream in(text);
  return clan::parse_edge_list(in, "edges.tsv", {unweighted});
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const clan::ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return 0;
}

TEST(EdgeList, SymmetricDuplicatesMerge) {
  const Graph g = parse("a\tb\nb\ta\n");
  EXPECT_EQ(g.node_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(g.edges()[0].weight, 2.0);
}

TEST(EdgeList, ExplicitWeight) {
  const Graph g = parse("a\tb\t1.5\n");
  EXPECT_EQ(g.node_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(g.edges()[0].weight, 1.5);
  EXPECT_DOUBLE_EQ(g.total_weight_2m(), 3.0);
}

TEST(EdgeList, UnweightedCollapsesMultiplicity) {
  const Graph g = parse("a\tb\nb\ta\na\tc\t4\n", true);
  for (const Edge& e : g.edges()) EXPECT_DOUBLE_EQ(e.weight, 1.0);
  EXPECT_DOUBLE_EQ(g.total_weight_2m(), 4.0);
}

TEST(EdgeList, NegativeWeightIsRejectedWithLineNumber) { EXPECT_EQ(parse_error_line("a\tb\t-1\n"), 1u); }

TEST(EdgeList, MalformedLinesReportTheirLine) {
  EXPECT_EQ(parse_error_line("a\tb\nc\n"), 2u);
  EXPECT_EQ(parse_error_line("a\tb\n# note\na\tb\t1\t2\n"), 3u);
  EXPECT_EQ(parse_error_line("a\tb\t0\n"), 1u);
  EXPECT_EQ(parse_error_line("a\tb\tabc\n"), 1u);
}

TEST(EdgeList, EmptyInputIsAnError) {
  try {
    parse("# only a comment\n\n");
    FAIL() << "expected an error";
  } catch (const clan::Error& e) {
    EXPECT_NE(std::string(e.what()).find("empty graph"), std::string::npos);
  }
}

TEST(EdgeList, CommentsAndIdsInFirstSeenOrder) {
  const Graph g = parse("# header\nx\ty\ny\tz\n");
  ASSERT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.external_id(0), "x");
  EXPECT_EQ(g.external_id(2), "z");
  EXPECT_EQ(g.find("y"), std::optional<clan::NodeId>(1));
  EXPECT_FALSE(g.find("w").has_value());
}

TEST(Tokenizer, LowercasesAndKeepsHashtags) {
  EXPECT_EQ(clan::tokenize("I support #OpenData"), (std::vector<std::string>{"i", "support", "#opendata"}));
  EXPECT_EQ(clan::tokenize("  Hello, @World!  ...  "), (std::vector<std::string>{"hello", "@world"}));
  EXPECT_TRUE(clan::tokenize("").empty());
}

TEST(Attributes, TextIsTokenizedAndAbsentNodesAreEmpty) {
  Graph g = parse("a\tb\n");
  std::istringstream in(R"({"id":"a","text":"I support #OpenData"})"
                        "\n");
  const clan::AttributeTable attrs = clan::parse_attributes(in, "attrs.jsonl", g);
  const auto a = attrs.tokens(*g.find("a"));
  EXPECT_EQ(std::vector<std::string>(a.begin(), a.end()),
            (std::vector<std::string>{"i", "support", "#opendata"}));
  EXPECT_TRUE(attrs.tokens(*g.find("b")).empty());
}

TEST(Attributes, TokenArrayAndUnknownIds) {
  Graph g = parse("a\tb\n");
  std::istringstream in(R"({"id":"a","tokens":["X","y"]})"
                        "\n"
                        R"({"id":"new","tokens":["z"]})"
                        "\n");
  const clan::AttributeTable attrs = clan::parse_attributes(in, "attrs.jsonl", g);
  ASSERT_EQ(g.node_count(), 3u);
  const auto added = g.find("new");
  ASSERT_TRUE(added.has_value());
  EXPECT_EQ(g.degree(*added), 0u);
  EXPECT_EQ(attrs.tokens(*added).size(), 1u);
  EXPECT_EQ(attrs.tokens(*g.find("a"))[0], "x");
  EXPECT_EQ(std::vector<std::string>(attrs.vocabulary().begin(), attrs.vocabulary().end()),
            (std::vector<std::string>{"x", "y", "z"}));
}

TEST(Attributes, MissingFieldsAndBadJson) {
  Graph g = parse("a\tb\n");
  std::istringstream missing(R"({"id":"a"})"
                             "\n");
  EXPECT_THROW(clan::parse_attributes(missing, "attrs.jsonl", g), clan::ParseError);

  std::istringstream bad(R"({"id":"a","text":"ok"})"
                         "\n{not json\n");
  try {
    clan::parse_attributes(bad, "attrs.jsonl", g);
    FAIL() << "expected a parse error";
  } catch (const clan::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Labels, KnownConflictingAndUnknown) {
  const Graph g = parse("a\tb\n");
  std::istringstream ok("a,Supporter\n");
  const clan::LabelTable labels = clan::parse_labels(ok, "labels.csv", g);
  EXPECT_EQ(labels.label_of(*g.find("a")), std::optional<std::string>("Supporter"));
  EXPECT_FALSE(labels.label_of(*g.find("b")).has_value());
  EXPECT_EQ(labels.labeled_count(), 1u);

  std::istringstream conflict("a,X\na,Y\n");
  EXPECT_THROW(clan::parse_labels(conflict, "labels.csv", g), clan::ParseError);
  std::istringstream repeat("a,X\na,X\n");
  EXPECT_NO_THROW(clan::parse_labels(repeat, "labels.csv", g));
  std::istringstream unknown("z,X\n");
  EXPECT_THROW(clan::parse_labels(unknown, "labels.csv", g), clan::ParseError);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(1, 3);
  clan::GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node(std::to_string(i));
  for (clan::NodeId u = 0; u < n; ++u)
    for (clan::NodeId v = u; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v, weight(rng));
  return std::move(b).build();
}

TEST(GraphProperties, AdjacencyIsSymmetricAndDegreesSum) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 12, 0.3);
    double degree_sum = 0.0;
    for (clan::NodeId u = 0; u < g.node_count(); ++u) {
      degree_sum += g.weighted_degree(u);
      for (const auto& nb : g.neighbors(u)) {
        const auto back = g.neighbors(nb.node);
        const bool found = std::any_of(back.begin(), back.end(), [&](const clan::Neighbor& x) {
          return x.node == u && x.weight == nb.weight;
        });
        EXPECT_TRUE(found);
      }
    }
    double edge_sum = 0.0;
    for (const Edge& e : g.edges()) edge_sum += e.weight;
    EXPECT_DOUBLE_EQ(degree_sum, g.total_weight_2m());
    EXPECT_DOUBLE_EQ(2.0 * edge_sum, g.total_weight_2m());
  }
}

TEST(GraphProperties, SelfLoopCountsTwiceTowardDegree) {
  const std::vector<Edge> edges{{0, 0, 1.5}, {0, 1, 1.0}};
  const Graph g = Graph::from_edges(2, edges);
  EXPECT_DOUBLE_EQ(g.weighted_degree(0), 4.0);
  EXPECT_DOUBLE_EQ(g.self_loop_weight(0), 1.5);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_DOUBLE_EQ(g.total_weight_2m(), 5.0);
}

TEST(GraphProperties, EdgeListRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 10, 0.4);
    if (g.edge_count() == 0) continue;
    std::ostringstream out;
    clan::write_edge_list(out, g);
    const Graph back = parse(out.str());
    ASSERT_EQ(back.edge_count(), g.edge_count());
    for (const Edge& e : g.edges()) {
      const auto u = back.find(g.external_id(e.u));
      const auto v = back.find(g.external_id(e.v));
      ASSERT_TRUE(u && v);
      const auto nbs = back.neighbors(*u);
      const auto it = std::find_if(nbs.begin(), nbs.end(), [&](const clan::Neighbor& x) { return x.node == *v; });
      ASSERT_NE(it, nbs.end());
      EXPECT_DOUBLE_EQ(it->weight, e.weight);
    }
  }
}

TEST(GraphProperties, ParsingIsDeterministic) {
  const std::string text = "c\ta\nb\tc\t2\na\tb\n";
  const Graph g1 = parse(text);
  const Graph g2 = parse(text);
  ASSERT_EQ(g1.edge_count(), g2.edge_count());
  for (std::size_t i = 0; i < g1.edge_count(); ++i) EXPECT_EQ(g1.edges()[i], g2.edges()[i]);
  EXPECT_TRUE(std::equal(g1.external_ids().begin(), g1.external_ids().end(), g2.external_ids().begin()));
}

TEST(GraphProperties, InducedSubgraphKeepsInternalEdges) {
  const std::vector<Edge> edges{{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 1.0}, {0, 3, 1.0}};
  const Graph g = Graph::from_edges(4, edges);
  const std::vector<clan::NodeId> keep{1, 2, 3};
  const Graph sub = clan::induced_subgraph(g, keep);
  EXPECT_EQ(sub.node_count(), 3u);
  EXPECT_EQ(sub.edge_count(), 2u);
  EXPECT_EQ(sub.external_id(0), "1");
  EXPECT_DOUBLE_EQ(sub.total_weight_2m(), 6.0);
}

TEST(GraphBuilder, RejectsNonPositiveWeights) {
  clan::GraphBuilder b;
  const auto a = b.add_node("a");
  const auto c = b.add_node("c");
  EXPECT_THROW(b.add_edge(a, c, 0.0), clan::Error);
  EXPECT_THROW(b.add_edge(a, c, -2.0), clan::Error);
}

}  // namespace
