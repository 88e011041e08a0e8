#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "docmine/doc_classifier.hpp"
#include "docmine/types.hpp"

namespace docmine {

using TypeShares = std::array<double, 6>;    // indexed by DocType
using SourceShares = std::array<double, 5>;  // indexed by Source

struct LanguageCell {
  TypeShares percentages{};
  std::size_t repos = 0;  // non-empty distributions averaged into this cell
};

using LanguageAverages = std::map<Language, std::array<LanguageCell, 5>>;

enum class AverageWeighting { PerRepo, ByMass };

/// Mean percentages per language x source over repositories; empty distributions are
/// skipped. Throws ContractError if a repo_id has no language in `repo_langs`.
LanguageAverages aggregate_by_language(const std::vector<TypeDistribution>& dists,
                                       const std::map<std::string, Language>& repo_langs,
                                       AverageWeighting weighting = AverageWeighting::PerRepo);

struct ContributionMatrix {
  std::array<SourceShares, 6> values{};  // [DocType][Source], each row sums to 100
  std::array<bool, 6> zero_mass{};       // rows with no mass anywhere (left all-zero)
};

/// value[type][source] = 100 * mass(type, source) / sum over sources of mass(type, s),
/// with mass(type, source) = sum over repos of percentage * token_mass / 100.
ContributionMatrix source_contribution(const std::vector<TypeDistribution>& dists);

struct TopicRecord {
  int index = 0;
  std::vector<Keyword> keywords;
  ScoreVector scores{};
  DocType label = DocType::Others;
  std::uint64_t mass = 0;
};

struct SourceResult {
  Source source = Source::TextualDocs;
  std::size_t documents = 0;
  std::size_t dropped_empty_documents = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<int, double>> coherence_by_k;
  std::vector<TopicRecord> topics;
  TypeDistribution distribution;
  bool counts_consistent = true;
};

enum class RepoStatus { Analyzed, Excluded, Failed };

struct RepoResult {
  std::string repo_id;
  Language language = Language::Cpp;
  RepoStatus status = RepoStatus::Analyzed;
  std::string reason;               // for Excluded / Failed
  std::vector<std::string> flags;   // e.g. "blank:pull_requests", "partial"
  std::array<std::size_t, 5> file_categories{};
  std::size_t artifacts_in_window = 0;
  std::size_t artifacts_dropped = 0;
  std::size_t malformed_artifacts = 0;
  std::size_t lex_warnings = 0;
  std::vector<SourceResult> sources;
};

struct Provenance {
  std::string anchor_date;
  int span_years = 3;
  std::string provider;
  std::string lexicon_version;
  std::string stopwords;
  std::uint64_t global_seed = 0;
  std::string k_mode;
  std::map<std::string, int> pinned_k;
  std::string lda_alpha;  // "50/K" or a number
  double lda_beta = 0.0;
  int lda_iterations = 0;
  int lda_burn_in = 0;
  bool lda_average_samples = false;
  bool docstrings = true;
  bool stem = false;
  std::uint32_t min_df = 1;
  std::string similarity;
  double tie_eps = 0.05;
  std::string topic_weighting;
  std::string average_weighting;
  bool hidden_files_included = true;
};

struct RunReport {
  Provenance provenance;
  std::vector<RepoResult> repos;
  LanguageAverages per_language_avg;
  TypeShares overall_type_share{};
  SourceShares overall_source_share{};
  ContributionMatrix contribution;
};

/// Fills the aggregate views of `report` from its analyzed repositories.
void finalize_report(RunReport& report, AverageWeighting weighting = AverageWeighting::PerRepo);

/// All per-repo, per-source distributions of analyzed repositories.
std::vector<TypeDistribution> analyzed_distributions(const RunReport& report);

std::string report_to_json(const RunReport& report);
std::string rq3_csv(const RunReport& report);
std::string rq4_csv(const RunReport& report);
std::string figure_csv(const RunReport& report, Source source);

/// Writes report.json, rq3.csv, rq4.csv and fig_<source>.csv into `out_dir` (created if
/// needed). Returns the written paths. Throws IoError naming the failing file.
std::vector<std::filesystem::path> emit_reports(const RunReport& report,
                                                const std::filesystem::path& out_dir);

/// Percentages are printed with four decimals in every CSV.
std::string format_percent(double value);

}  // namespace docmine
