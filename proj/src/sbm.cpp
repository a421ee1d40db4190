#include "clan/sbm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "clan/error.hpp"

namespace clan {
namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

std::size_t shared_token_count(const SbmSpec& spec) {
  return static_cast<std::size_t>(std::llround(spec.token_overlap * static_cast<double>(spec.vocab_per_block)));
}

}  // namespace

void SbmSpec::validate() const {
  if (block_sizes.empty()) throw Error("sbm: block_sizes must not be empty");
  for (std::size_t s : block_sizes)
    if (s == 0) throw Error("sbm: block sizes must be positive");
  if (!is_probability(p_in)) throw Error("sbm: p_in must lie in [0,1]");
  if (!is_probability(p_out)) throw Error("sbm: p_out must lie in [0,1]");
  if (p_out > p_in) throw Error("sbm: p_out must not exceed p_in");
  if (!is_probability(token_overlap)) throw Error("sbm: token_overlap must lie in [0,1]");
  if (tokens_per_node > 0 && vocab_per_block == 0) throw Error("sbm: vocab_per_block must be positive");
  if (!std::isfinite(degree_label_correlation) || degree_label_correlation < -1.0)
    throw Error("sbm: degree_label_correlation must be >= -1");
}

std::vector<std::string> block_vocabulary(const SbmSpec& spec, std::size_t block) {
  const std::size_t shared = shared_token_count(spec);
  std::vector<std::string> vocab;
  vocab.reserve(spec.vocab_per_block);
  for (std::size_t i = 0; i < shared; ++i) vocab.push_back("w" + std::to_string(i));
  for (std::size_t i = shared; i < spec.vocab_per_block; ++i)
    vocab.push_back("#b" + std::to_string(block) + "t" + std::to_string(i - shared));
  return vocab;
}

AttributedGraph generate_attributed_sbm(const SbmSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);

  std::vector<std::size_t> block_of;
  GraphBuilder builder;
  for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
    for (std::size_t i = 0; i < spec.block_sizes[b]; ++i) {
      builder.add_node("n" + std::to_string(block_of.size()));
      block_of.push_back(b);
    }
  }
  const std::size_t n = block_of.size();
  const double p_block0 = std::min(1.0, spec.p_in * (1.0 + spec.degree_label_correlation));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      double p = spec.p_out;
      if (block_of[u] == block_of[v]) p = block_of[u] == 0 ? p_block0 : spec.p_in;
      // Always draw so the stream does not depend on which pairs are certain.
      const double draw = unit(rng);
      if (draw < p) builder.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }

  AttributedGraph out;
  out.graph = std::move(builder).build();

  std::vector<std::vector<std::string>> vocab;
  for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) vocab.push_back(block_vocabulary(spec, b));
  std::vector<std::vector<std::string>> tokens(n);
  out.labels = LabelTable(n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto& words = vocab[block_of[u]];
    if (!words.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
      for (std::size_t t = 0; t < spec.tokens_per_node; ++t) tokens[u].push_back(words[pick(rng)]);
    }
    out.labels.set(static_cast<NodeId>(u), "block" + std::to_string(block_of[u]));
  }
  out.attributes = AttributeTable(std::move(tokens));
  return out;
}

}  // namespace clan
