#include <gtest/gtest.h>

#include <random>

#include "docmine/doc_classifier.hpp"
#include "docmine/errors.hpp"
#include "test_support.hpp"

using namespace docmine;
using docmine::testing::reference_label;

namespace {

TopicSummary summary_of(std::vector<std::string> words) {
  TopicSummary s;
  double w = 1.0;
  for (auto& word : words) s.keywords.push_back({std::move(word), w *= 0.9});
  return s;
}

LdaModel with_masses(const std::vector<std::uint32_t>& masses) {
  LdaModel m;
  m.k = static_cast<int>(masses.size());
  m.num_docs = 1;
  m.doc_topic_counts = masses;
  m.topic_totals.assign(masses.begin(), masses.end());
  return m;
}

std::vector<std::string> lexicon_words(DocType t) {
  const auto& set = CategoryLexicon::builtin().keywords(t);
  return {set.begin(), set.end()};
}

}  // namespace

TEST(Lexicon, BuiltinShape) {
  const CategoryLexicon& lex = CategoryLexicon::builtin();
  EXPECT_EQ(lex.version(), "builtin-v1");
  for (DocType t : kLabeledDocTypes) EXPECT_EQ(lex.keywords(t).size(), kLexiconKeywords);
  EXPECT_TRUE(lex.keywords(DocType::LicenseRelated).contains("copyright"));
  EXPECT_TRUE(lex.keywords(DocType::ErrorRelated).contains("crash"));
}

TEST(Lexicon, ValidationErrors) {
  EXPECT_THROW(CategoryLexicon::parse("[]"), ConfigError);
  EXPECT_THROW(CategoryLexicon::parse("{\"api_related\": [\"a\"]}"), ConfigError);
  std::string bad_case = R"({"api_related":["API","b","c","d","e","f","g","h","i","j"],
    "file_related":["a","b","c","d","e","f","g","h","i","j"],
    "project_related":["a","b","c","d","e","f","g","h","i","j"],
    "license_related":["a","b","c","d","e","f","g","h","i","j"],
    "error_related":["a","b","c","d","e","f","g","h","i","j"]})";
  EXPECT_THROW(CategoryLexicon::parse(bad_case), ConfigError);
  std::string ok = bad_case;
  ok.replace(ok.find("API"), 3, "aa");
  const CategoryLexicon lex = CategoryLexicon::parse(ok);
  EXPECT_EQ(lex.version().rfind("sha-", 0), 0u);
  std::string with_others = ok;
  with_others.insert(1, R"("others":["a","b","c","d","e","f","g","h","i","j"],)");
  EXPECT_THROW(CategoryLexicon::parse(with_others), ConfigError);
}

TEST(Similarity, OverlapCoefficient) {
  const auto api = lexicon_words(DocType::ApiRelated);
  const auto& set = CategoryLexicon::builtin().keywords(DocType::ApiRelated);
  EXPECT_DOUBLE_EQ(similarity(summary_of(api), set), 1.0);
  EXPECT_DOUBLE_EQ(similarity(summary_of({"zz1", "zz2", "zz3"}), set), 0.0);
  std::vector<std::string> half(api.begin(), api.begin() + 5);
  for (int i = 0; i < 5; ++i) half.push_back("other" + std::to_string(i));
  EXPECT_DOUBLE_EQ(similarity(summary_of(half), set), 0.5);
  // Fewer keywords than the lexicon: the smaller set is the denominator.
  EXPECT_DOUBLE_EQ(similarity(summary_of({api[0], "zz"}), set), 0.5);
}

TEST(Similarity, CosineVariant) {
  const auto& set = CategoryLexicon::builtin().keywords(DocType::ApiRelated);
  TopicSummary s;
  s.keywords = {{"api", 3.0}, {"zz", 4.0}};
  EXPECT_NEAR(cosine_similarity(s, set), 3.0 / (5.0 * std::sqrt(10.0)), 1e-12);
  EXPECT_EQ(similarity_scores(s, CategoryLexicon::builtin(), SimilarityMetric::Cosine)[0], cosine_similarity(s, set));
}

TEST(LabelScores, Examples) {
  EXPECT_EQ(label_scores({0.1, 0.6, 0.1, 0.0, 0.1}), DocType::FileRelated);
  EXPECT_EQ(label_scores({0.2, 0.2, 0.2, 0.2, 0.2}), DocType::Others);
  EXPECT_EQ(label_scores({0.33, 0.30, 0.30, 0.30, 0.30}), DocType::Others);
}

TEST(LabelScores, BoundaryAndTies) {
  EXPECT_EQ(label_scores({0.349, 0.3, 0.3, 0.3, 0.3}), DocType::Others);
  EXPECT_EQ(label_scores({0.35, 0.3, 0.3, 0.3, 0.3}), DocType::ApiRelated);
  EXPECT_EQ(label_scores({0.3, 0.3, 0.3, 0.3, 0.351}), DocType::ErrorRelated);
  EXPECT_EQ(label_scores({0.0, 0.5, 0.0, 0.5, 0.0}), DocType::FileRelated);
  EXPECT_EQ(label_scores({0.0, 0.0, 0.0, 0.5, 0.5}), DocType::LicenseRelated);
  EXPECT_EQ(label_scores({0.0, 0.0, 0.0, 0.0, 0.0}), DocType::Others);
}

TEST(LabelScores, MatchesReferenceOnRandomVectors) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 5000; ++i) {
    std::array<int, 5> milli{};
    const int spread = 1 + static_cast<int>(rng() % 120);
    const int base = static_cast<int>(rng() % 800);
    for (int& m : milli) m = base + static_cast<int>(rng() % spread);
    ScoreVector s{};
    for (std::size_t j = 0; j < 5; ++j) s[j] = milli[j] / 1000.0;
    ASSERT_EQ(label_scores(s), reference_label(milli)) << i;
  }
}

TEST(LabelScores, ArgmaxScaleInvariant) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    ScoreVector s{};
    for (double& x : s) x = u(rng);
    const double factor = 0.5 + u(rng) * 2;
    ScoreVector scaled = s;
    for (double& x : scaled) x *= factor;
    const DocType a = label_scores(s), b = label_scores(scaled);
    if (a != DocType::Others && b != DocType::Others) ASSERT_EQ(a, b);
  }
}

TEST(LabelScores, OthersMonotoneInEpsilon) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 0.2);
  for (int i = 0; i < 2000; ++i) {
    ScoreVector s{};
    for (double& x : s) x = u(rng);
    bool others = false;
    for (double eps : {0.0, 0.01, 0.05, 0.1, 0.2, 0.5}) {
      const bool now = label_scores(s, eps) == DocType::Others;
      ASSERT_TRUE(!others || now);
      others = now;
    }
  }
}

TEST(LabelTopic, UsesLexicon) {
  EXPECT_EQ(label_topic(summary_of(lexicon_words(DocType::LicenseRelated)), CategoryLexicon::builtin()),
            DocType::LicenseRelated);
  EXPECT_EQ(label_topic(summary_of({"zz", "yy"}), CategoryLexicon::builtin()), DocType::Others);
}

TEST(Distribution, Examples) {
  const std::vector<DocType> two = {DocType::ErrorRelated, DocType::ProjectRelated};
  auto d = distribution(with_masses({5, 5}), two);
  EXPECT_DOUBLE_EQ(d.percent(DocType::ErrorRelated), 50.0);
  EXPECT_DOUBLE_EQ(d.percent(DocType::ProjectRelated), 50.0);

  const std::vector<DocType> four = {DocType::ErrorRelated, DocType::ErrorRelated, DocType::FileRelated,
                                     DocType::Others};
  d = distribution(with_masses({40, 30, 20, 10}), four);
  EXPECT_DOUBLE_EQ(d.percent(DocType::ErrorRelated), 70.0);
  EXPECT_DOUBLE_EQ(d.percent(DocType::FileRelated), 20.0);
  EXPECT_DOUBLE_EQ(d.percent(DocType::Others), 10.0);
  EXPECT_EQ(d.token_mass, 100u);

  const std::vector<DocType> others(3, DocType::Others);
  EXPECT_DOUBLE_EQ(distribution(with_masses({1, 2, 3}), others).percent(DocType::Others), 100.0);
}

TEST(Distribution, UniformWeighting) {
  const std::vector<DocType> labels = {DocType::ErrorRelated, DocType::FileRelated};
  const auto d = distribution(with_masses({90, 10}), labels, TopicWeighting::Uniform);
  EXPECT_DOUBLE_EQ(d.percent(DocType::ErrorRelated), 50.0);
}

TEST(Distribution, PermutationInvariant) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> masses(6);
    std::vector<DocType> labels(6);
    for (std::size_t i = 0; i < 6; ++i) {
      masses[i] = static_cast<std::uint32_t>(rng() % 50);
      labels[i] = kAllDocTypes[rng() % 6];
    }
    masses[0] += 1;
    std::vector<std::size_t> perm = {0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint32_t> pm(6);
    std::vector<DocType> pl(6);
    for (std::size_t i = 0; i < 6; ++i) {
      pm[i] = masses[perm[i]];
      pl[i] = labels[perm[i]];
    }
    const auto a = distribution(with_masses(masses), labels);
    const auto b = distribution(with_masses(pm), pl);
    double sum = 0.0;
    for (std::size_t t = 0; t < 6; ++t) {
      EXPECT_NEAR(a.percentages[t], b.percentages[t], 1e-9);
      EXPECT_GE(a.percentages[t], 0.0);
      sum += a.percentages[t];
    }
    EXPECT_NEAR(sum, 100.0, 1e-6);
  }
}

TEST(Distribution, EmptyAndArityErrors) {
  const std::vector<DocType> one = {DocType::Others};
  EXPECT_THROW(distribution(with_masses({1, 2}), one), ContractError);
  const std::vector<DocType> two = {DocType::Others, DocType::Others};
  const auto d = distribution(with_masses({0, 0}), two);
  EXPECT_TRUE(d.empty);
  for (double p : d.percentages) EXPECT_EQ(p, 0.0);
}
