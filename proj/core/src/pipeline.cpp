#include "docmine/pipeline.hpp"

#include <spdlog/spdlog.h>

#include <atomic>
#include <fstream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <thread>

#include "docmine/errors.hpp"
#include "docmine/seeding.hpp"

namespace fs = std::filesystem;

namespace docmine {

namespace {

std::string join_lines(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out.push_back('\n');
    out += p;
  }
  return out;
}

Source source_for(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::Issue: return Source::Issues;
    case ArtifactKind::PullRequest: return Source::PullRequests;
    case ArtifactKind::Commit: return Source::Commits;
  }
  return Source::Issues;
}

struct RepoContext {
  const RunConfig& config;
  ArtifactProvider& provider;
  std::mutex& provider_mutex;
};

SourceResult analyze_source(const RunConfig& config, const std::string& repo_id, const SourceDocuments& docs) {
  SourceResult result;
  result.source = docs.source;
  result.distribution.source = docs.source;
  result.distribution.repo_id = repo_id;
  result.seed = derive_seed(config.global_seed, repo_id, to_string(docs.source));

  TokenizerOptions tok;
  tok.stopwords = &config.stopwords;
  tok.stem = config.stem;
  std::vector<TokenizedDocument> tokenized;
  tokenized.reserve(docs.texts.size());
  for (const std::string& text : docs.texts) tokenized.push_back({docs.source, repo_id, tokenize(text, tok)});

  Corpus corpus;
  try {
    corpus = build_corpus(tokenized, CorpusOptions{config.min_df});
  } catch (const EmptyCorpusError&) {
    result.dropped_empty_documents = tokenized.size();
    return result;  // distribution stays empty
  }
  result.documents = corpus.docs.size();
  result.dropped_empty_documents = corpus.dropped_empty;

  LdaConfig lda = config.lda;
  lda.seed = result.seed;
  LdaModel model;
  if (config.k_mode == KMode::Sweep) {
    SweepOptions sweep;
    sweep.k_min = config.k_min;
    sweep.k_max = config.k_max;
    SweepResult swept = select_topic_count(corpus, lda, sweep);
    result.coherence_by_k = std::move(swept.scores);
    model = std::move(swept.best_model);
  } else {
    model = train_lda(corpus, config.pinned_k.at(docs.source), lda);
  }
  result.k = model.k;
  result.counts_consistent = counts_consistent(model, corpus);

  const std::vector<TopicSummary> summaries = top_keywords(model, kDefaultTopKeywords);
  std::vector<DocType> labels;
  for (const TopicSummary& summary : summaries) {
    TopicRecord topic;
    topic.index = summary.topic_index;
    topic.keywords = summary.keywords;
    topic.scores = similarity_scores(summary, config.lexicon, config.similarity);
    topic.label = label_scores(topic.scores, config.tie_eps);
    topic.mass = model.topic_mass(summary.topic_index);
    labels.push_back(topic.label);
    result.topics.push_back(std::move(topic));
  }
  result.distribution = distribution(model, labels, config.topic_weighting);
  result.distribution.source = docs.source;
  result.distribution.repo_id = repo_id;
  return result;
}

RepoResult analyze_repo(const RepoContext& ctx, const RepoEntry& entry, const RepoHook& hook) {
  const RunConfig& config = ctx.config;
  RepoResult repo;
  repo.repo_id = entry.repo_id;
  repo.language = entry.language;
  try {
    if (hook) hook(entry);
    RepoSnapshot snapshot = scan_repo(entry.local_path, entry.repo_id, entry.language);
    for (const FileRecord& f : snapshot.files) ++repo.file_categories[static_cast<std::size_t>(f.category)];

    RepoMeta meta;
    LoadResult artifacts;
    {
      std::lock_guard lock(ctx.provider_mutex);
      meta = ctx.provider.repo_meta(entry.repo_id);
      snapshot.fork_flag = meta.fork.value_or(false);
      snapshot.pull_request_count = meta.pull_request_count.value_or(0);
      if (!eligible_repo(snapshot)) {
        repo.status = RepoStatus::Excluded;
        repo.reason = snapshot.fork_flag ? "fork" : "no pull requests";
        return repo;
      }
      artifacts = load_artifacts(ctx.provider, entry.repo_id, RecencyWindow(config.anchor_date, config.span_years));
    }
    repo.artifacts_in_window = artifacts.records.size();
    repo.artifacts_dropped = artifacts.dropped_out_of_window;
    repo.malformed_artifacts = artifacts.malformed;
    for (ArtifactKind kind : artifacts.blank) {
      repo.flags.push_back("blank:" + std::string(to_string(source_for(kind))));
    }
    if (artifacts.partial) repo.flags.push_back("partial");
    if (artifacts.malformed > 0) repo.flags.push_back("malformed:" + std::to_string(artifacts.malformed));

    ExtractOptions extract;
    extract.python_docstrings = config.docstrings;
    const auto documents = gather_documents(entry, snapshot, artifacts.records, extract, &repo.lex_warnings);
    for (const SourceDocuments& docs : documents) {
      repo.sources.push_back(analyze_source(config, entry.repo_id, docs));
    }
    repo.status = RepoStatus::Analyzed;
  } catch (const std::exception& e) {
    spdlog::error("{}: analysis failed: {}", entry.repo_id, e.what());
    repo.status = RepoStatus::Failed;
    repo.reason = e.what();
    repo.sources.clear();
    repo.flags.clear();
  }
  return repo;
}

Provenance make_provenance(const RunConfig& config, const std::string& provider) {
  Provenance p;
  p.anchor_date = format_date(config.anchor_date);
  p.span_years = config.span_years;
  p.provider = provider;
  p.lexicon_version = config.lexicon.version();
  p.stopwords = config.stopwords_label;
  p.global_seed = config.global_seed;
  p.k_mode = config.k_mode == KMode::Sweep ? "sweep" : "pinned";
  if (config.k_mode == KMode::Pinned) {
    for (const auto& [source, k] : config.pinned_k) p.pinned_k[std::string(to_string(source))] = k;
  } else {
    p.pinned_k["k_min"] = config.k_min;
    p.pinned_k["k_max"] = config.k_max;
  }
  if (config.lda.alpha) {
    std::ostringstream a;
    a << *config.lda.alpha;
    p.lda_alpha = a.str();
  } else {
    p.lda_alpha = "50/K";
  }
  p.lda_beta = config.lda.beta;
  p.lda_iterations = config.lda.iterations;
  p.lda_burn_in = config.lda.burn_in;
  p.lda_average_samples = config.lda.average_samples;
  p.docstrings = config.docstrings;
  p.stem = config.stem;
  p.min_df = config.min_df;
  p.similarity = config.similarity == SimilarityMetric::Overlap ? "overlap" : "cosine";
  p.tie_eps = config.tie_eps;
  p.topic_weighting = config.topic_weighting == TopicWeighting::TokenMass ? "token_mass" : "uniform";
  p.average_weighting = config.average_weighting == AverageWeighting::PerRepo ? "per_repo" : "by_mass";
  return p;
}

}  // namespace

std::vector<RepoEntry> parse_repo_list(std::string_view text, const fs::path& base_dir) {
  std::vector<RepoEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string id, path, lang, extra;
    if (!(fields >> id)) continue;
    if (!(fields >> path >> lang) || (fields >> extra)) {
      throw ParseError("repo list line " + std::to_string(line_no) + ": expected '<repo_id> <local_path> <language>'");
    }
    auto language = parse_language(lang);
    if (!language) throw ParseError("repo list line " + std::to_string(line_no) + ": unknown language '" + lang + "'");
    fs::path local(path);
    if (local.is_relative() && !base_dir.empty()) local = base_dir / local;
    entries.push_back({id, local.lexically_normal(), *language});
  }
  return entries;
}

std::vector<RepoEntry> load_repo_list(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open repo list");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_repo_list(text, path.parent_path());
}

void RunConfig::validate() const {
  if (jobs < 1) throw ConfigError("--jobs must be >= 1");
  if (span_years < 1) throw ConfigError("--span-years must be >= 1");
  if (!anchor_date.ok()) throw ConfigError("anchor date is invalid");
  if (k_min < kMinTopics || k_max > kMaxTopics || k_min > k_max) throw ConfigError("invalid topic-count range");
  for (Source s : kAllSources) {
    auto it = pinned_k.find(s);
    if (it == pinned_k.end() || it->second < kMinTopics || it->second > kMaxTopics) {
      throw ConfigError("pinned K for " + std::string(to_string(s)) + " must be in [2, 100]");
    }
  }
  if (!(tie_eps >= 0.0)) throw ConfigError("tie epsilon must be >= 0");
  if (min_df < 1) throw ConfigError("--min-df must be >= 1");
  try {
    lda.validate();
  } catch (const ContractError& e) {
    throw ConfigError(e.what());
  }
  for (const RepoEntry& r : repos) {
    std::error_code ec;
    if (!fs::is_directory(r.local_path, ec)) {
      throw ConfigError("repository path does not exist: " + r.local_path.string());
    }
  }
}

std::array<SourceDocuments, 5> gather_documents(const RepoEntry& entry, const RepoSnapshot& snapshot,
                                                const std::vector<ArtifactRecord>& artifacts,
                                                const ExtractOptions& extract, std::size_t* lex_warnings) {
  std::array<SourceDocuments, 5> out;
  for (Source s : kAllSources) out[index_of(s)].source = s;

  for (const FileRecord& file : snapshot.files) {
    if (file.category != FileCategory::SourceCode || !file.language_hint) continue;
    auto bytes = read_file_bytes(entry.local_path / file.relative_path);
    if (!bytes) {
      spdlog::warn("{}: cannot read {}", entry.repo_id, file.relative_path);
      continue;
    }
    ExtractResult comments = extract_comments(sanitize_utf8(*bytes), *file.language_hint, extract, file.relative_path);
    if (lex_warnings) *lex_warnings += comments.warnings.size();
    std::vector<std::string> texts;
    for (const CommentSpan& span : comments.spans) {
      if (!span.text.empty()) texts.push_back(span.text);
    }
    if (!texts.empty()) out[index_of(Source::SourceCodeComments)].texts.push_back(join_lines(texts));
  }

  for (TextDocument& doc : collect_textual_documents(snapshot, entry.local_path)) {
    out[index_of(Source::TextualDocs)].texts.push_back(std::move(doc.text));
  }

  for (const ArtifactRecord& record : artifacts) {
    out[index_of(source_for(record.kind))].texts.push_back(join_lines(extract_fields(record)));
  }
  return out;
}

RunOutcome run(const RunConfig& config, ArtifactProvider& provider, const RepoHook& hook) {
  config.validate();
  std::mutex provider_mutex;
  const RepoContext ctx{config, provider, provider_mutex};

  std::vector<RepoResult> results(config.repos.size());
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), config.repos.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < config.repos.size(); ++i) results[i] = analyze_repo(ctx, config.repos[i], hook);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < config.repos.size(); i = next++) {
          results[i] = analyze_repo(ctx, config.repos[i], hook);
        }
      });
    }
  }

  RunOutcome outcome;
  outcome.report.provenance = make_provenance(config, provider.name());
  outcome.report.repos = std::move(results);
  for (const RepoResult& r : outcome.report.repos) {
    if (r.status != RepoStatus::Excluded) ++outcome.eligible;
  }
  finalize_report(outcome.report, config.average_weighting);
  outcome.exit_code = outcome.eligible == 0 ? 2 : 0;
  return outcome;
}

}  // namespace docmine
