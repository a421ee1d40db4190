#include "clan/classifier.hpp"

#include <cmath>
#include <map>
#include <set>

#include "clan/error.hpp"

namespace clan {

TokenClassifierModel TokenClassifierModel::train(std::span<const TrainingDocument> documents, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error("smoothing alpha must be positive");
  if (documents.empty()) throw Error("no training documents");

  TokenClassifierModel model;
  model.alpha_ = alpha;

  std::map<CommunityId, std::size_t> doc_counts;
  std::set<std::string> vocab;
  for (const auto& doc : documents) {
    ++doc_counts[doc.label];
    vocab.insert(doc.tokens.begin(), doc.tokens.end());
  }
  if (vocab.empty()) throw Error("no training features");

  model.vocabulary_.assign(vocab.begin(), vocab.end());
  for (std::size_t i = 0; i < model.vocabulary_.size(); ++i) model.token_index_.emplace(model.vocabulary_[i], i);

  std::map<CommunityId, std::size_t> class_index;
  for (const auto& [label, count] : doc_counts) {
    class_index.emplace(label, model.classes_.size());
    model.classes_.push_back(label);
  }

  const std::size_t k = model.classes_.size();
  const std::size_t v = model.vocabulary_.size();
  std::vector<std::vector<double>> counts(k, std::vector<double>(v, 0.0));
  std::vector<double> totals(k, 0.0);
  for (const auto& doc : documents) {
    const std::size_t c = class_index.at(doc.label);
    for (const auto& tok : doc.tokens) {
      counts[c][model.token_index_.at(tok)] += 1.0;
      totals[c] += 1.0;
    }
  }

  const double n_docs = static_cast<double>(documents.size());
  model.log_priors_.resize(k);
  model.log_likelihoods_.assign(k, std::vector<double>(v));
  model.log_unseen_.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    model.log_priors_[c] = std::log(static_cast<double>(doc_counts.at(model.classes_[c])) / n_docs);
    const double denom = totals[c] + alpha * static_cast<double>(v);
    for (std::size_t t = 0; t < v; ++t) model.log_likelihoods_[c][t] = std::log((counts[c][t] + alpha) / denom);
    model.log_unseen_[c] = std::log(alpha / denom);
  }
  return model;
}

double TokenClassifierModel::log_likelihood(std::size_t class_index, const std::string& token) const {
  auto it = token_index_.find(token);
  if (it == token_index_.end()) return log_unseen_.at(class_index);
  return log_likelihoods_.at(class_index)[it->second];
}

Classification TokenClassifierModel::classify(std::span<const std::string> tokens) const {
  std::vector<double> score(log_priors_);
  for (const auto& tok : tokens) {
    auto it = token_index_.find(tok);
    if (it == token_index_.end()) continue;
    for (std::size_t c = 0; c < classes_.size(); ++c) score[c] += log_likelihoods_[c][it->second];
  }

  std::size_t best = 0;
  for (std::size_t c = 1; c < score.size(); ++c)
    if (score[c] > score[best]) best = c;

  const double top = score[best];
  double norm = 0.0;
  std::vector<double> posteriors(score.size());
  for (std::size_t c = 0; c < score.size(); ++c) {
    posteriors[c] = std::exp(score[c] - top);
    norm += posteriors[c];
  }
  for (double& p : posteriors) p /= norm;
  return {classes_[best], posteriors[best], std::move(posteriors)};
}

}  // namespace clan
