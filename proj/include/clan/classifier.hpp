#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "clan/partition.hpp"

namespace clan {

/// A labelled training document: one node's tokens.
struct TrainingDocument {
  CommunityId label;
  std::span<const std::string> tokens;
};

struct Classification {
  CommunityId community;
  double posterior;
  /// Posterior per class, in the order of TokenClassifierModel::classes().
  std::vector<double> posteriors;
};

/// Multinomial naive Bayes over token counts with add-alpha smoothing.
///
/// Priors are proportional to the number of documents per class; the
/// vocabulary is every token seen in training.
class TokenClassifierModel {
 public:
  /// Throws if there are no documents, if every document is empty, or if
  /// alpha <= 0.
  static TokenClassifierModel train(std::span<const TrainingDocument> documents, double alpha);

  /// Out-of-vocabulary tokens are ignored; with nothing left the prior decides.
  /// Ties go to the lowest community id.
  Classification classify(std::span<const std::string> tokens) const;

  /// Ascending community ids.
  std::span<const CommunityId> classes() const noexcept { return classes_; }
  double log_prior(std::size_t class_index) const { return log_priors_.at(class_index); }
  /// log P(token | class); tokens outside the vocabulary get the unseen mass.
  double log_likelihood(std::size_t class_index, const std::string& token) const;
  std::span<const std::string> vocabulary() const noexcept { return vocabulary_; }
  double alpha() const noexcept { return alpha_; }

 private:
  std::vector<CommunityId> classes_;
  std::vector<double> log_priors_;
  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, std::size_t> token_index_;
  /// [class][token]
  std::vector<std::vector<double>> log_likelihoods_;
  std::vector<double> log_unseen_;
  double alpha_ = 1.0;
};

}  // namespace clan
