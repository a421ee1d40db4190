#include <gtest/gtest.h>

#include <random>

#include "clan/error.hpp"
#include "clan/fixtures.hpp"
#include "clan/louvain.hpp"
#include "clan/sbm.hpp"
#include "oracles.hpp"

namespace {

using clan::CommunityId;
using clan::Edge;
using clan::Graph;
using clan::Partition;

constexpr double kExact = 1e-12;

void expect_monotone(const clan::LouvainTrace& trace) {
  for (std::size_t i = 1; i < trace.pass_q.size(); ++i) EXPECT_GE(trace.pass_q[i], trace.pass_q[i - 1] - kExact);
  for (std::size_t i = 1; i < trace.level_q.size(); ++i) EXPECT_GE(trace.level_q[i], trace.level_q[i - 1] - kExact);
  for (double drift : trace.aggregation_drift) EXPECT_LE(std::abs(drift), kExact);
}

TEST(Modularity, SingleCommunityIsZero) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto edges = clan::oracle::random_edges(rng, 7, 0.4, true);
    const Graph g = Graph::from_edges(7, edges);
    EXPECT_NEAR(clan::modularity(g, Partition::single_community(7)), 0.0, kExact);
  }
}

TEST(Modularity, TwoTrianglesIsOneHalfAndOptimal) {
  const Graph g = clan::fixtures::two_triangles();
  EXPECT_NEAR(clan::modularity(g, Partition({0, 0, 0, 1, 1, 1})), 0.5, kExact);

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  double best = -1.0;
  std::size_t count = 0;
  clan::oracle::for_each_set_partition(6, [&](const std::vector<CommunityId>& c) {
    ++count;
    best = std::max(best, clan::oracle::modularity_matrix(6, edges, c));
  });
  EXPECT_EQ(count, 203u);  // Bell(6)
  EXPECT_NEAR(best, 0.5, kExact);
}

TEST(Modularity, SingleEdgeSingletonsIsMinusOneHalf) {
  const std::vector<Edge> edges{{0, 1, 1.0}};
  const Graph g = Graph::from_edges(2, edges);
  EXPECT_NEAR(clan::modularity(g, Partition::singletons(2)), -0.5, kExact);
}

TEST(Modularity, EdgelessGraphIsAnError) {
  const Graph g = Graph::from_edges(3, {});
  try {
    clan::modularity(g, Partition::singletons(3));
    FAIL() << "expected an error";
  } catch (const clan::Error& e) {
    EXPECT_STREQ(e.what(), "modularity undefined for empty edge set");
  }
  EXPECT_THROW(clan::louvain(g), clan::Error);
}

TEST(Modularity, MatchesMatrixOracleOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const auto edges = clan::oracle::random_edges(rng, n, 0.45, true);
    const auto c = clan::oracle::random_assignment(rng, n);
    const Graph g = Graph::from_edges(n, edges);
    EXPECT_NEAR(clan::modularity(g, Partition(c)), clan::oracle::modularity_matrix(n, edges, c), kExact);
  }
}

TEST(LocalMove, TwoTrianglesFromSingletons) {
  const Graph g = clan::fixtures::two_triangles();
  const auto r = clan::local_move_phase(g, Partition::singletons(6), {});
  EXPECT_TRUE(r.improved);
  EXPECT_NEAR(clan::modularity(g, r.partition), 0.5, kExact);
  const auto c = r.partition.assignment();
  EXPECT_EQ(c[0], c[1]);
  EXPECT_EQ(c[1], c[2]);
  EXPECT_EQ(c[3], c[4]);
  EXPECT_NE(c[0], c[3]);
}

TEST(LocalMove, FixedPointIsUnchanged) {
  const Graph g = clan::fixtures::two_triangles();
  const Partition start({0, 0, 0, 1, 1, 1});
  const auto r = clan::local_move_phase(g, start, {});
  EXPECT_FALSE(r.improved);
  EXPECT_EQ(r.partition, start);
}

TEST(LocalMove, PathGraphImproves) {
  const std::vector<Edge> edges{{0, 1, 1.0}, {1, 2, 1.0}};
  const Graph g = Graph::from_edges(3, edges);
  const double before = clan::modularity(g, Partition::singletons(3));
  const auto r = clan::local_move_phase(g, Partition::singletons(3), {});
  EXPECT_TRUE(r.improved);
  EXPECT_GT(clan::modularity(g, r.partition), before);
}

TEST(LocalMove, NeverDecreasesQ) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto edges = clan::oracle::random_edges(rng, 8, 0.35, false);
    const Graph g = Graph::from_edges(8, edges);
    const Partition start(clan::oracle::random_assignment(rng, 8));
    clan::LouvainTrace trace;
    const auto r = clan::local_move_phase(g, start, {}, &trace);
    EXPECT_GE(clan::modularity(g, r.partition), clan::modularity(g, start) - kExact);
    expect_monotone(trace);
  }
}

TEST(Aggregate, TwoTrianglesBecomeTwoSelfLoops) {
  const Graph g = clan::fixtures::two_triangles();
  const auto agg = clan::aggregate_graph(g, Partition({0, 0, 0, 1, 1, 1}));
  ASSERT_EQ(agg.graph.node_count(), 2u);
  ASSERT_EQ(agg.graph.edge_count(), 2u);
  EXPECT_DOUBLE_EQ(agg.graph.self_loop_weight(0), 3.0);
  EXPECT_DOUBLE_EQ(agg.graph.self_loop_weight(1), 3.0);
  EXPECT_NEAR(clan::modularity(agg.graph, Partition::singletons(2)), 0.5, kExact);
}

TEST(Aggregate, SingletonsGiveAnIsomorphicGraph) {
  const Graph g = clan::fixtures::karate_club();
  const auto agg = clan::aggregate_graph(g, Partition::singletons(g.node_count()));
  ASSERT_EQ(agg.graph.node_count(), g.node_count());
  ASSERT_EQ(agg.graph.edge_count(), g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    EXPECT_EQ(agg.graph.edges()[i].u, g.edges()[i].u);
    EXPECT_EQ(agg.graph.edges()[i].v, g.edges()[i].v);
    EXPECT_DOUBLE_EQ(agg.graph.edges()[i].weight, g.edges()[i].weight);
  }
}

TEST(Aggregate, CompleteGraphK4) {
  std::vector<Edge> edges;
  for (clan::NodeId u = 0; u < 4; ++u)
    for (clan::NodeId v = u + 1; v < 4; ++v) edges.push_back({u, v, 1.0});
  const Graph g = Graph::from_edges(4, edges);
  const auto agg = clan::aggregate_graph(g, Partition({0, 0, 1, 1}));
  ASSERT_EQ(agg.graph.node_count(), 2u);
  EXPECT_DOUBLE_EQ(agg.graph.self_loop_weight(0), 1.0);
  EXPECT_DOUBLE_EQ(agg.graph.self_loop_weight(1), 1.0);
  const auto nbs = agg.graph.neighbors(0);
  const auto inter = std::find_if(nbs.begin(), nbs.end(), [](const clan::Neighbor& n) { return n.node == 1; });
  ASSERT_NE(inter, nbs.end());
  EXPECT_DOUBLE_EQ(inter->weight, 4.0);
}

TEST(Aggregate, PreservesModularity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto edges = clan::oracle::random_edges(rng, 8, 0.4, true);
    const Graph g = Graph::from_edges(8, edges);
    const Partition p(clan::oracle::random_assignment(rng, 8));
    const auto agg = clan::aggregate_graph(g, p);
    EXPECT_NEAR(clan::modularity(agg.graph, Partition::singletons(agg.graph.node_count())), clan::modularity(g, p),
                kExact);
  }
}

TEST(Louvain, TwoTrianglesAreTheComponents) {
  const Graph g = clan::fixtures::two_triangles();
  const Partition p = clan::louvain(g);
  EXPECT_EQ(p, Partition({0, 0, 0, 1, 1, 1}));
  EXPECT_NEAR(clan::modularity(g, p), 0.5, kExact);
}

TEST(Louvain, KarateClubReachesReferenceQuality) {
  const Graph g = clan::fixtures::karate_club();
  ASSERT_EQ(g.node_count(), 34u);
  ASSERT_EQ(g.edge_count(), 78u);
  clan::LouvainTrace trace;
  const Partition p = clan::louvain(g, {}, &trace);
  EXPECT_GE(clan::modularity(g, p), 0.40);
  expect_monotone(trace);
}

TEST(Louvain, SingleEdgeIsOneCommunity) {
  const std::vector<Edge> edges{{0, 1, 1.0}};
  const Graph g = Graph::from_edges(2, edges);
  const Partition p = clan::louvain(g);
  EXPECT_EQ(p.community_count(), 1u);
  EXPECT_NEAR(clan::modularity(g, p), 0.0, kExact);
}

TEST(Louvain, BeatsTrivialPartitionsOnSmallGraphs) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    const Graph g = Graph::from_edges(n, clan::oracle::random_edges(rng, n, 0.4, false));
    clan::LouvainTrace trace;
    const double q = clan::modularity(g, clan::louvain(g, {}, &trace));
    EXPECT_GE(q, clan::modularity(g, Partition::singletons(n)) - kExact);
    EXPECT_GE(q, clan::modularity(g, Partition::single_community(n)) - kExact);
    expect_monotone(trace);
  }
}

TEST(Louvain, DeterministicAndNormalized) {
  const auto data = clan::generate_attributed_sbm(clan::fixtures::small_sbm_spec(1));
  const Partition a = clan::louvain(data.graph);
  const Partition b = clan::louvain(data.graph);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.is_contiguous());
  EXPECT_EQ(a, a.normalized());
  const auto sizes = a.sizes();
  for (std::size_t c = 1; c < sizes.size(); ++c) EXPECT_GE(sizes[c - 1], sizes[c]);
}

TEST(Louvain, ShuffledOrderIsSeedDeterministic) {
  const Graph g = clan::fixtures::karate_club();
  clan::LouvainConfig config;
  config.deterministic_order = false;
  config.seed = 7;
  clan::LouvainTrace trace;
  const Partition a = clan::louvain(g, config, &trace);
  EXPECT_EQ(a, clan::louvain(g, config));
  expect_monotone(trace);
  EXPECT_GE(clan::modularity(g, a), 0.38);
}

}  // namespace
