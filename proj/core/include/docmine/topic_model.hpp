#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "docmine/text_pipeline.hpp"

namespace docmine {

struct LdaConfig {
  /// Symmetric document-topic prior. Unset means 50 / K.
  std::optional<double> alpha;
  double beta = 0.01;
  int iterations = 1000;
  int burn_in = 200;
  std::uint64_t seed = 0;
  /// Keep, per token, the topic it held most often after burn-in instead of the final
  /// assignment.
  bool average_samples = false;

  double alpha_for(int k) const { return alpha.value_or(50.0 / k); }
  /// Throws ContractError when alpha <= 0, beta <= 0, iterations < 1 or
  /// burn_in outside [0, iterations).
  void validate() const;
};

inline constexpr int kMinTopics = 2;
inline constexpr int kMaxTopics = 100;

class LdaModel {
 public:
  int k = 0;
  std::size_t num_docs = 0;
  LdaConfig config;
  std::shared_ptr<const std::vector<std::string>> vocabulary;
  std::vector<std::uint32_t> topic_word_counts;  // k x V, row-major
  std::vector<std::uint32_t> doc_topic_counts;   // D x k, row-major
  std::vector<std::uint64_t> topic_totals;       // k
  /// Topic of every token. Tokens of a document are laid out by ascending term id,
  /// each repeated `count` times.
  std::vector<std::vector<std::uint16_t>> assignments;

  std::size_t vocab_size() const { return vocabulary ? vocabulary->size() : 0; }
  std::uint32_t topic_word(int topic, std::uint32_t term) const {
    return topic_word_counts[static_cast<std::size_t>(topic) * vocab_size() + term];
  }
  std::uint32_t doc_topic(std::size_t doc, int topic) const {
    return doc_topic_counts[doc * static_cast<std::size_t>(k) + static_cast<std::size_t>(topic)];
  }
  /// Tokens assigned to `topic` over the whole corpus.
  std::uint64_t topic_mass(int topic) const { return topic_totals[static_cast<std::size_t>(topic)]; }
  std::uint64_t total_tokens() const;
};

/// Collapsed Gibbs sampling. Deterministic for a fixed (corpus, k, config).
/// Throws EmptyCorpusError for an empty corpus, ContractError for k outside
/// [kMinTopics, kMaxTopics] or an invalid config.
LdaModel train_lda(const Corpus& corpus, int k, const LdaConfig& config);

/// True when every count matrix reconciles with the corpus token counts.
bool counts_consistent(const LdaModel& model, const Corpus& corpus);

struct Keyword {
  std::string token;
  double weight = 0.0;
  friend bool operator==(const Keyword&, const Keyword&) = default;
};

struct TopicSummary {
  int topic_index = 0;
  std::vector<Keyword> keywords;  // non-increasing weight, ties lexicographic
};

inline constexpr int kDefaultTopKeywords = 10;

/// The n most probable tokens of each topic under (count + beta) / (total + V * beta).
/// n larger than the vocabulary is truncated with a warning.
std::vector<TopicSummary> top_keywords(const LdaModel& model, int n = kDefaultTopKeywords);

/// Mean over topics of the UMass score of each topic's top_n words: the sum over ranked
/// pairs i < j of log((D(w_i, w_j) + 1) / D(w_j)), D counting documents of `corpus`.
double coherence(const LdaModel& model, const Corpus& corpus, int top_n = kDefaultTopKeywords);

/// Document-frequency table used by coherence; exposed for reuse across a sweep.
class CooccurrenceIndex {
 public:
  explicit CooccurrenceIndex(const Corpus& corpus);
  std::uint32_t doc_freq(std::uint32_t term) const;
  std::uint32_t co_doc_freq(std::uint32_t a, std::uint32_t b) const;

 private:
  std::vector<std::vector<std::uint32_t>> postings_;  // term -> sorted doc ids
};

double coherence(const LdaModel& model, const CooccurrenceIndex& index, int top_n);

struct SweepResult {
  int k_star = 0;
  std::vector<std::pair<int, double>> scores;  // (k, coherence) for every k tried
  LdaModel best_model;
};

struct SweepOptions {
  int k_min = 2;
  int k_max = 20;
  int top_n = kDefaultTopKeywords;
  int jobs = 1;
};

/// Trains one model per k in [k_min, k_max] and keeps the most coherent; exact ties go
/// to the smaller k.
SweepResult select_topic_count(const Corpus& corpus, const LdaConfig& config,
                               const SweepOptions& options = {});

/// JSON form: k, config, counts, and an FNV-1a hash of the vocabulary.
std::string model_to_json(const LdaModel& model);
/// Inverse of model_to_json. The vocabulary must hash to the stored value.
LdaModel model_from_json(std::string_view json,
                         std::shared_ptr<const std::vector<std::string>> vocabulary);

std::string vocabulary_hash(const std::vector<std::string>& terms);

}  // namespace docmine
