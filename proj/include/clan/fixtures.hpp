#pragma once

#include <string>
#include <vector>

#include "clan/dataset.hpp"
#include "clan/graph.hpp"
#include "clan/sbm.hpp"

/// Small embedded datasets used by the tests, the acceptance suite and the
/// Python smoke tests.
namespace clan::fixtures {

/// Two disjoint unit-weight triangles: 0-1-2 and 3-4-5.
Graph two_triangles();

/// Zachary's karate club, 34 nodes and 78 unit edges, ids "0".."33".
Graph karate_club();

/// Edge list text of karate_club() in the tab-separated input format.
std::string karate_club_edge_list();

/// Faction of each karate member after the split: "hi" or "officer".
LabelTable karate_factions(const Graph& karate);

/// Tokens drawn from a faction-specific vocabulary (plus a few shared words),
/// seeded; gives the karate club an informative attribute table.
AttributeTable karate_attributes(const Graph& karate, std::uint64_t seed);

/// Sparse two-block SBM whose Louvain run leaves many low-degree nodes in
/// sub-threshold communities.
/// All SBM fixtures have two blocks, 8 tokens per node from 30-word block
/// vocabularies, and token_overlap 0.2.
SbmSpec small_sbm_spec(std::uint64_t seed = 42);

/// Block 0 denser than block 1 (degree_label_correlation 1), so the degree
/// ratio curve has a clearly positive slope.
SbmSpec skewed_sbm_spec(std::uint64_t seed = 42);

/// The three specs of the resilience sweep, from sparse and uncorrelated to
/// dense and degree-skewed.
std::vector<SbmSpec> resilience_specs(std::uint64_t seed);

}  // namespace clan::fixtures
