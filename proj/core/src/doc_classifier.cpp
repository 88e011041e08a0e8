#include "docmine/doc_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>

#include "docmine/errors.hpp"
#include "docmine/seeding.hpp"
#include "json.hpp"

using nlohmann::json;

namespace docmine {

namespace embedded {
extern const std::string_view kDefaultLexicon;
}

namespace {

constexpr double kBoundarySlack = 1e-9;

bool is_lower_token(const std::string& s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isupper(c) || std::isspace(c);
  });
}

}  // namespace

CategoryLexicon::CategoryLexicon(std::map<DocType, std::set<std::string>> entries, std::string version)
    : entries_(std::move(entries)), version_(std::move(version)) {
  if (entries_.contains(DocType::Others)) throw ConfigError("lexicon: 'others' cannot have keywords");
  for (DocType type : kLabeledDocTypes) {
    auto it = entries_.find(type);
    if (it == entries_.end()) throw ConfigError("lexicon: missing category " + std::string(to_string(type)));
    if (it->second.size() != kLexiconKeywords) {
      throw ConfigError("lexicon: category " + std::string(to_string(type)) + " needs exactly 10 distinct keywords");
    }
    for (const std::string& kw : it->second) {
      if (!is_lower_token(kw)) throw ConfigError("lexicon: keyword '" + kw + "' must be a lowercase token");
    }
  }
}

const CategoryLexicon& CategoryLexicon::builtin() {
  static const CategoryLexicon lexicon = parse(embedded::kDefaultLexicon, "builtin-v1");
  return lexicon;
}

CategoryLexicon CategoryLexicon::parse(std::string_view text, std::string version) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("lexicon: invalid json: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("lexicon: top level must be an object");
  std::map<DocType, std::set<std::string>> entries;
  for (const auto& [name, words] : j.items()) {
    const auto type = parse_doc_type(name);
    if (!type) throw ConfigError("lexicon: unknown category '" + name + "'");
    if (!words.is_array()) throw ConfigError("lexicon: category '" + name + "' must be an array");
    std::set<std::string>& set = entries[*type];
    for (const json& w : words) {
      if (!w.is_string()) throw ConfigError("lexicon: keywords must be strings");
      if (!set.insert(w.get<std::string>()).second) {
        throw ConfigError("lexicon: duplicate keyword '" + w.get<std::string>() + "' in " + name);
      }
    }
  }
  if (version.empty()) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(json(j).dump())));
    version = std::string("sha-") + buf;
  }
  return CategoryLexicon(std::move(entries), std::move(version));
}

CategoryLexicon CategoryLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open lexicon file");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse(text);
}

const std::set<std::string>& CategoryLexicon::keywords(DocType type) const {
  auto it = entries_.find(type);
  if (it == entries_.end()) throw ContractError("lexicon has no keywords for " + std::string(to_string(type)));
  return it->second;
}

double similarity(const TopicSummary& summary, const std::set<std::string>& lexicon_keywords) {
  std::set<std::string> topic;
  for (const Keyword& k : summary.keywords) topic.insert(k.token);
  if (topic.empty() || lexicon_keywords.empty()) return 0.0;
  std::size_t shared = 0;
  for (const std::string& t : topic) shared += lexicon_keywords.count(t);
  return static_cast<double>(shared) / static_cast<double>(std::min(topic.size(), lexicon_keywords.size()));
}

double cosine_similarity(const TopicSummary& summary, const std::set<std::string>& lexicon_keywords) {
  double dot = 0.0;
  double norm = 0.0;
  for (const Keyword& k : summary.keywords) {
    norm += k.weight * k.weight;
    if (lexicon_keywords.contains(k.token)) dot += k.weight;
  }
  if (norm == 0.0 || lexicon_keywords.empty()) return 0.0;
  return dot / (std::sqrt(norm) * std::sqrt(static_cast<double>(lexicon_keywords.size())));
}

ScoreVector similarity_scores(const TopicSummary& summary, const CategoryLexicon& lexicon,
                              SimilarityMetric metric) {
  ScoreVector scores{};
  for (std::size_t i = 0; i < kLabeledDocTypes.size(); ++i) {
    const auto& keywords = lexicon.keywords(kLabeledDocTypes[i]);
    scores[i] = metric == SimilarityMetric::Overlap ? similarity(summary, keywords)
                                                    : cosine_similarity(summary, keywords);
  }
  return scores;
}

DocType label_scores(const ScoreVector& scores, double tie_eps) {
  const auto [min_it, max_it] = std::minmax_element(scores.begin(), scores.end());
  if (*max_it - *min_it < tie_eps - kBoundarySlack) return DocType::Others;
  // max_element returns the first maximum, i.e. the earliest type in tie-break order.
  return kLabeledDocTypes[static_cast<std::size_t>(std::max_element(scores.begin(), scores.end()) - scores.begin())];
}

DocType label_topic(const TopicSummary& summary, const CategoryLexicon& lexicon, double tie_eps,
                    SimilarityMetric metric) {
  if (summary.keywords.empty()) throw ContractError("label_topic: summary has no keywords");
  return label_scores(similarity_scores(summary, lexicon, metric), tie_eps);
}

TypeDistribution distribution(const LdaModel& model, std::span<const DocType> labels, TopicWeighting weighting) {
  if (labels.size() != static_cast<std::size_t>(model.k)) {
    throw ContractError("distribution: " + std::to_string(labels.size()) + " labels for " +
                        std::to_string(model.k) + " topics");
  }
  TypeDistribution dist;
  dist.token_mass = model.total_tokens();
  if (dist.token_mass == 0) return dist;

  std::array<double, 6> mass{};
  double total = 0.0;
  for (int t = 0; t < model.k; ++t) {
    const double m = weighting == TopicWeighting::TokenMass ? static_cast<double>(model.topic_mass(t)) : 1.0;
    mass[index_of(labels[static_cast<std::size_t>(t)])] += m;
    total += m;
  }
  for (std::size_t i = 0; i < mass.size(); ++i) dist.percentages[i] = 100.0 * mass[i] / total;
  dist.empty = false;
  return dist;
}

}  // namespace docmine
