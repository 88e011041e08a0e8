#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docmine/topic_model.hpp"
#include "docmine/types.hpp"

namespace docmine {

inline constexpr std::size_t kLexiconKeywords = 10;
inline constexpr double kDefaultTieEpsilon = 0.05;

/// Ten keywords for each of the five labeled documentation types.
class CategoryLexicon {
 public:
  /// Throws ConfigError unless every labeled type has exactly ten distinct lowercase
  /// keywords and no unknown category is present.
  explicit CategoryLexicon(std::map<DocType, std::set<std::string>> entries,
                           std::string version = {});

  static const CategoryLexicon& builtin();
  /// JSON object: category name -> array of 10 strings.
  static CategoryLexicon parse(std::string_view json, std::string version = {});
  static CategoryLexicon load(const std::filesystem::path& path);

  const std::set<std::string>& keywords(DocType type) const;
  /// "builtin-v1" or a content hash for loaded files.
  const std::string& version() const { return version_; }

 private:
  std::map<DocType, std::set<std::string>> entries_;
  std::string version_;
};

enum class SimilarityMetric { Overlap, Cosine };

/// Overlap coefficient |topic ∩ lexicon| / min(|topic|, |lexicon|).
double similarity(const TopicSummary& summary, const std::set<std::string>& lexicon_keywords);
/// Cosine between the topic's keyword weights and the lexicon's indicator vector.
double cosine_similarity(const TopicSummary& summary,
                         const std::set<std::string>& lexicon_keywords);

using ScoreVector = std::array<double, 5>;  // indexed like kLabeledDocTypes

ScoreVector similarity_scores(const TopicSummary& summary, const CategoryLexicon& lexicon,
                              SimilarityMetric metric = SimilarityMetric::Overlap);

/// Others when max - min < tie_eps over all five scores, else the argmax with ties
/// resolved in kLabeledDocTypes order. Differences within 1e-9 of tie_eps count as
/// equal to it.
DocType label_scores(const ScoreVector& scores, double tie_eps = kDefaultTieEpsilon);

DocType label_topic(const TopicSummary& summary, const CategoryLexicon& lexicon,
                    double tie_eps = kDefaultTieEpsilon,
                    SimilarityMetric metric = SimilarityMetric::Overlap);

struct TypeDistribution {
  Source source = Source::TextualDocs;
  std::string repo_id;
  std::array<double, 6> percentages{};  // indexed by DocType
  bool empty = true;                    // the source had no tokens
  std::uint64_t token_mass = 0;

  double percent(DocType t) const { return percentages[index_of(t)]; }
};

enum class TopicWeighting { TokenMass, Uniform };

/// Percentage of each type, weighting every topic by the tokens assigned to it (or
/// equally). Throws ContractError when labels.size() != model.k.
TypeDistribution distribution(const LdaModel& model, std::span<const DocType> labels,
                              TopicWeighting weighting = TopicWeighting::TokenMass);

}  // namespace docmine
