#include <gtest/gtest.h>

#include <random>

#include "clan/error.hpp"
#include "clan/evaluation.hpp"
#include "metric_fixtures.hpp"

namespace {

using clan::NodeId;
using Group = std::vector<NodeId>;

constexpr double kExact = 1e-12;

TEST(PairwiseMetrics, Examples) {
  EXPECT_NEAR(clan::pairwise_f1(Group{1, 2, 3}, Group{1, 2, 3}), 1.0, kExact);
  EXPECT_NEAR(clan::pairwise_f1(Group{1, 2}, Group{1, 2, 3, 4}), 2.0 / 3.0, kExact);
  EXPECT_EQ(clan::pairwise_f1(Group{1, 2}, Group{3, 4}), 0.0);
  EXPECT_EQ(clan::pairwise_f1(Group{}, Group{3, 4}), 0.0);
  EXPECT_NEAR(clan::pairwise_jaccard(Group{1, 2, 3}, Group{1, 2, 3}), 1.0, kExact);
  EXPECT_NEAR(clan::pairwise_jaccard(Group{1, 2}, Group{1, 2, 3, 4}), 0.5, kExact);
  EXPECT_EQ(clan::pairwise_jaccard(Group{1}, Group{}), 0.0);
}

TEST(PairwiseMetrics, Errors) {
  EXPECT_THROW(clan::pairwise_f1(Group{1}, Group{}), clan::Error);
  EXPECT_THROW(clan::pairwise_jaccard(Group{}, Group{}), clan::Error);
}

TEST(SymmetricBestMatch, HandEnumeratedFixtures) {
  for (const auto& fx : clan::testing::metric_fixtures()) {
    const auto r = clan::symmetric_best_match(fx.detected, fx.truth);
    EXPECT_NEAR(r.avg_f1, fx.avg_f1, kExact) << fx.name;
    EXPECT_NEAR(r.avg_jaccard, fx.avg_jaccard, kExact) << fx.name;
  }
}

TEST(SymmetricBestMatch, PartnersAndTies) {
  // Truth {1,2,3,4} ties between {1,2} and {3,4}; the lower index wins.
  const std::vector<Group> detected{{1, 2}, {3, 4}};
  const std::vector<Group> truth{{1, 2, 3, 4}};
  const auto r = clan::symmetric_best_match(detected, truth);
  ASSERT_EQ(r.truth_to_detected.size(), 1u);
  EXPECT_EQ(r.truth_to_detected[0].partner, 0u);
  EXPECT_EQ(r.detected_to_truth[1].partner, 0u);
}

TEST(SymmetricBestMatch, F1DominatesJaccardOnRandomPairs) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> nodes(2, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [detected, truth] = clan::testing::random_partition_pair(rng, static_cast<std::size_t>(nodes(rng)));
    const auto r = clan::symmetric_best_match(detected, truth);
    EXPECT_GE(r.avg_f1, r.avg_jaccard - kExact);
    EXPECT_GE(r.avg_jaccard, 0.0);
    EXPECT_LE(r.avg_f1, 1.0 + kExact);
    const auto swapped = clan::symmetric_best_match(truth, detected);
    EXPECT_NEAR(swapped.avg_f1, r.avg_f1, kExact);
  }
}

clan::LabelTable labels(const std::vector<std::optional<std::string>>& values) {
  clan::LabelTable t(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i]) t.set(static_cast<NodeId>(i), *values[i]);
  return t;
}

TEST(AveragedScores, TwoDetectedVersusOneTrue) {
  const clan::PartialAssignment detected{0, 0, 1, 1};
  const auto r = clan::averaged_scores(detected, labels({"T", "T", "T", "T"}));
  EXPECT_NEAR(r.avg_f1, 2.0 / 3.0, kExact);
  EXPECT_NEAR(r.avg_jaccard, 0.5, kExact);
  EXPECT_EQ(r.evaluated_nodes, 4u);
  ASSERT_EQ(r.per_community.size(), 2u);
  EXPECT_EQ(r.per_community[0].best_truth, "T");
}

TEST(AveragedScores, UnassignedLabeledNodesLowerRecall) {
  const clan::PartialAssignment detected{0, 0, std::nullopt, std::nullopt, std::nullopt, std::nullopt, 0};
  const auto r = clan::averaged_scores(detected, labels({"A", "A", "A", "B", "B", "B", std::nullopt}));
  EXPECT_NEAR(r.avg_f1, 0.6, kExact);
  EXPECT_NEAR(r.avg_jaccard, 0.5, kExact);
  EXPECT_EQ(r.evaluated_nodes, 6u);
  EXPECT_EQ(r.matching().at(0), "A");
}

TEST(AveragedScores, NoLabelsIsAnError) {
  EXPECT_THROW(clan::averaged_scores({0, 1}, labels({std::nullopt, std::nullopt})), clan::Error);
}

TEST(UnlabeledFraction, Percentages) {
  EXPECT_EQ(clan::unlabeled_fraction(4, {0, 0, 1, 1}), 0.0);
  EXPECT_EQ(clan::unlabeled_fraction(4, {0, std::nullopt, 1, std::nullopt}), 50.0);
  EXPECT_EQ(clan::unlabeled_fraction(4, {0, 0}), 50.0);
}

TEST(TokenAudit, DiscardedTokensOfUnassignedNodes) {
  const clan::AttributeTable attrs({{"#a", "x"}, {"#b", "x", "#b"}, {"#c", "y"}, {"#b"}});
  const clan::PartialAssignment assignment{0, std::nullopt, std::nullopt, 1};
  const auto all = clan::discarded_token_audit(attrs, assignment);
  EXPECT_EQ(all.vocabulary_size, 5u);
  EXPECT_EQ(all.discarded_count, 2u);  // #c, y
  EXPECT_NEAR(all.discarded_pct, 40.0, kExact);
  EXPECT_EQ(all.examples, (std::vector<std::string>{"#c", "y"}));

  const auto tags = clan::discarded_token_audit(attrs, assignment, {.hashtags_only = true});
  EXPECT_TRUE(tags.hashtags_only);
  EXPECT_EQ(tags.vocabulary_size, 3u);
  EXPECT_EQ(tags.discarded_count, 1u);

  const auto none = clan::discarded_token_audit(attrs, {0, 0, 0, 0});
  EXPECT_EQ(none.discarded_count, 0u);
  EXPECT_EQ(none.discarded_pct, 0.0);
}

TEST(AgreementColoring, AgreeDisagreeUnassigned) {
  const clan::PartialAssignment detected{0, 0, 1, std::nullopt, 1};
  const auto truth = labels({"A", "B", "B", "A", std::nullopt});
  const std::map<clan::CommunityId, std::string> matching{{0, "A"}, {1, "B"}};
  const auto colors = clan::agreement_coloring(detected, truth, matching);
  ASSERT_EQ(colors.size(), 5u);
  EXPECT_EQ(colors[0], clan::Agreement::kAgree);
  EXPECT_EQ(colors[1], clan::Agreement::kDisagree);
  EXPECT_EQ(colors[2], clan::Agreement::kAgree);
  EXPECT_EQ(colors[3], clan::Agreement::kUnassigned);
  EXPECT_FALSE(colors[4].has_value());
  EXPECT_STREQ(clan::to_string(clan::Agreement::kUnassigned), "unassigned");
}

}  // namespace
