#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "docmine/artifact_ingest.hpp"
#include "docmine/comment_extractor.hpp"
#include "docmine/corpus_scanner.hpp"
#include "docmine/doc_classifier.hpp"
#include "docmine/reporting.hpp"
#include "docmine/text_pipeline.hpp"
#include "docmine/topic_model.hpp"

namespace docmine {

struct RepoEntry {
  std::string repo_id;
  std::filesystem::path local_path;  // resolved against the list file's directory
  Language language = Language::Cpp;
};

/// One `<repo_id> <local_path> <language>` triple per line; `#` starts a comment.
/// Throws ParseError with the line number on malformed lines.
std::vector<RepoEntry> parse_repo_list(std::string_view text,
                                       const std::filesystem::path& base_dir = {});
std::vector<RepoEntry> load_repo_list(const std::filesystem::path& path);

enum class KMode { Sweep, Pinned };

struct RunConfig {
  std::vector<RepoEntry> repos;
  std::string stopwords_label = "builtin-en";
  StopwordSet stopwords = StopwordSet::english();
  CategoryLexicon lexicon = CategoryLexicon::builtin();
  Date anchor_date = today_utc();
  int span_years = 3;
  KMode k_mode = KMode::Sweep;
  /// K per source in pinned mode.
  std::map<Source, int> pinned_k = {{Source::SourceCodeComments, 5},
                                    {Source::TextualDocs, 5},
                                    {Source::Commits, 4},
                                    {Source::Issues, 5},
                                    {Source::PullRequests, 4}};
  int k_min = 2;
  int k_max = 20;
  LdaConfig lda;
  std::uint64_t global_seed = 0;
  int jobs = 1;
  std::uint32_t min_df = 1;
  bool stem = false;
  bool docstrings = true;
  SimilarityMetric similarity = SimilarityMetric::Overlap;
  double tie_eps = kDefaultTieEpsilon;
  TopicWeighting topic_weighting = TopicWeighting::TokenMass;
  AverageWeighting average_weighting = AverageWeighting::PerRepo;

  /// Throws ConfigError when a repository path is missing, jobs < 1, spans are
  /// non-positive, K bounds are invalid, or the LDA config is invalid.
  void validate() const;
};

/// Called before each repository is analyzed; throwing from it fails only that repo.
using RepoHook = std::function<void(const RepoEntry&)>;

struct RunOutcome {
  RunReport report;
  std::size_t eligible = 0;
  int exit_code = 0;  // nonzero when no repository was eligible
};

/// Scans, ingests, models and labels every eligible repository, then aggregates.
/// Repositories run on `config.jobs` threads; results do not depend on scheduling.
RunOutcome run(const RunConfig& config, ArtifactProvider& provider, const RepoHook& hook = {});

/// Text documents of one source, ready for tokenization.
struct SourceDocuments {
  Source source;
  std::vector<std::string> texts;
};

/// Per-source raw documents for one repository: one document per source file's
/// comments, per textual file, and per artifact.
std::array<SourceDocuments, 5> gather_documents(const RepoEntry& entry,
                                                const RepoSnapshot& snapshot,
                                                const std::vector<ArtifactRecord>& artifacts,
                                                const ExtractOptions& extract,
                                                std::size_t* lex_warnings = nullptr);

}  // namespace docmine
