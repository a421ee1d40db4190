#include "clan/fixtures.hpp"

#include <array>
#include <random>
#include <utility>

namespace clan::fixtures {
namespace {

constexpr std::array<std::pair<int, int>, 78> kKarateEdges{{
    {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},   {0, 10},  {0, 11},
    {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},  {1, 2},   {1, 3},   {1, 7},   {1, 13},
    {1, 17},  {1, 19},  {1, 21},  {1, 30},  {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},
    {2, 28},  {2, 32},  {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
    {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33}, {15, 32}, {15, 33},
    {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32}, {22, 33}, {23, 25}, {23, 27}, {23, 29},
    {23, 32}, {23, 33}, {24, 25}, {24, 27}, {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31},
    {28, 33}, {29, 32}, {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
}};

// 1 = officer faction.
constexpr std::array<int, 34> kKarateFaction{0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0,
                                             0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

}  // namespace

Graph two_triangles() {
  const std::array<Edge, 6> edges{{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}}};
  return Graph::from_edges(6, edges);
}

Graph karate_club() {
  std::vector<Edge> edges;
  edges.reserve(kKarateEdges.size());
  for (auto [u, v] : kKarateEdges) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), 1.0});
  return Graph::from_edges(34, edges);
}

std::string karate_club_edge_list() {
  std::string out = "# Zachary karate club\n";
  for (auto [u, v] : kKarateEdges) out += std::to_string(u) + '\t' + std::to_string(v) + '\n';
  return out;
}

LabelTable karate_factions(const Graph& karate) {
  LabelTable labels(karate.node_count());
  for (int i = 0; i < 34; ++i) {
    if (auto n = karate.find(std::to_string(i))) labels.set(*n, kKarateFaction[i] ? "officer" : "hi");
  }
  return labels;
}

AttributeTable karate_attributes(const Graph& karate, std::uint64_t seed) {
  const std::array<std::vector<std::string>, 2> vocab{{
      {"#mrhi", "karate", "dojo", "#instructor", "lessons", "kata", "w0", "w1"},
      {"#officer", "club", "board", "#president", "dues", "meeting", "w0", "w1"},
  }};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vocab[0].size() - 1);
  std::vector<std::vector<std::string>> tokens(karate.node_count());
  for (int i = 0; i < 34; ++i) {
    auto n = karate.find(std::to_string(i));
    if (!n) continue;
    for (int t = 0; t < 6; ++t) tokens[*n].push_back(vocab[kKarateFaction[i]][pick(rng)]);
  }
  return AttributeTable(std::move(tokens));
}

namespace {

SbmSpec two_block_spec(std::size_t block_size, double p_in, double p_out, double correlation, std::uint64_t seed) {
  SbmSpec spec;
  spec.block_sizes = {block_size, block_size};
  spec.p_in = p_in;
  spec.p_out = p_out;
  spec.tokens_per_node = 8;
  spec.vocab_per_block = 30;
  spec.token_overlap = 0.2;
  spec.degree_label_correlation = correlation;
  spec.seed = seed;
  return spec;
}

}  // namespace

SbmSpec small_sbm_spec(std::uint64_t seed) { return two_block_spec(120, 0.025, 0.002, 0.0, seed); }

std::vector<SbmSpec> resilience_specs(std::uint64_t seed) {
  return {
      small_sbm_spec(seed),
      two_block_spec(150, 0.03, 0.003, 0.5, seed),
      skewed_sbm_spec(seed),
  };
}

SbmSpec skewed_sbm_spec(std::uint64_t seed) { return two_block_spec(200, 0.04, 0.004, 1.0, seed); }

}  // namespace clan::fixtures
