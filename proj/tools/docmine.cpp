#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "docmine/errors.hpp"
#include "docmine/github_provider.hpp"
#include "docmine/pipeline.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace docmine;

namespace {

void print_error(std::string_view kind, std::string_view message) {
  nlohmann::json err = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
}

std::unique_ptr<ArtifactProvider> make_provider(const std::string& mode, const fs::path& dump_dir,
                                                const std::string& api_url) {
  if (mode == "dump") {
    if (dump_dir.empty()) throw ConfigError("--artifacts dump requires --dump-dir");
    std::error_code ec;
    if (!fs::is_directory(dump_dir, ec)) throw ConfigError("dump directory does not exist: " + dump_dir.string());
    return std::make_unique<DumpProvider>(dump_dir);
  }
  GithubOptions options;
  if (!api_url.empty()) options.base_url = api_url;
  if (const char* token = std::getenv(kTokenEnvVar)) options.token = token;
  return std::make_unique<GithubProvider>(std::move(options), make_http_transport());
}

struct RunArgs {
  fs::path repos;
  std::string artifacts = "dump";
  fs::path dump_dir;
  std::string api_url;
  std::string anchor;
  int span_years = 3;
  std::string k_mode = "sweep";
  int k_comments = 5, k_texts = 5, k_commits = 4, k_issues = 5, k_pulls = 4;
  int k_min = 2, k_max = 20;
  fs::path lexicon;
  fs::path out = "out";
  std::uint64_t seed = 0;
  int jobs = 1;
  std::uint32_t min_df = 1;
  fs::path stopwords;
  std::string docstrings = "on";
  bool stem = false;
  double alpha = 0.0;
  double beta = 0.01;
  int iterations = 1000;
  int burn_in = 200;
  bool average = false;
  std::string similarity = "overlap";
  double tie_eps = kDefaultTieEpsilon;
  bool uniform_topics = false;
  bool weight_by_mass = false;
};

void add_run_options(CLI::App& cmd, RunArgs& a) {
  cmd.add_option("--repos", a.repos, "Repository list: '<repo_id> <local_path> <language>' per line")
      ->required()
      ->check(CLI::ExistingFile);
  cmd.add_option("--artifacts", a.artifacts, "Artifact provider")->check(CLI::IsMember({"api", "dump"}));
  cmd.add_option("--dump-dir", a.dump_dir, "Root of <repo_id>/{issues,pulls,commits}.jsonl dumps");
  cmd.add_option("--api-url", a.api_url, "REST API base URL");
  cmd.add_option("--anchor-date", a.anchor, "Recency window anchor (YYYY-MM-DD), default today");
  cmd.add_option("--span-years", a.span_years, "Recency window length in years")->check(CLI::PositiveNumber);
  cmd.add_option("--k-mode", a.k_mode, "Topic count selection")->check(CLI::IsMember({"sweep", "pinned"}));
  cmd.add_option("--k-comments", a.k_comments, "Pinned K for source code comments");
  cmd.add_option("--k-texts", a.k_texts, "Pinned K for textual documents");
  cmd.add_option("--k-commits", a.k_commits, "Pinned K for commits");
  cmd.add_option("--k-issues", a.k_issues, "Pinned K for issues");
  cmd.add_option("--k-pulls", a.k_pulls, "Pinned K for pull requests");
  cmd.add_option("--k-min", a.k_min, "Smallest K tried by the sweep");
  cmd.add_option("--k-max", a.k_max, "Largest K tried by the sweep");
  cmd.add_option("--lexicon", a.lexicon, "Category lexicon JSON")->check(CLI::ExistingFile);
  cmd.add_option("--out", a.out, "Output directory");
  cmd.add_option("--seed", a.seed, "Global seed");
  cmd.add_option("--jobs", a.jobs, "Repositories analyzed in parallel");
  cmd.add_option("--min-df", a.min_df, "Minimum document frequency of a term");
  cmd.add_option("--stopwords", a.stopwords, "Stopword file, one word per line")->check(CLI::ExistingFile);
  cmd.add_option("--docstrings", a.docstrings, "Treat Python docstrings as comments")
      ->check(CLI::IsMember({"on", "off"}));
  cmd.add_flag("--stem", a.stem, "Apply light suffix stemming");
  cmd.add_option("--alpha", a.alpha, "Dirichlet prior on document-topic mixtures (default 50/K)");
  cmd.add_option("--beta", a.beta, "Dirichlet prior on topic-word distributions");
  cmd.add_option("--iterations", a.iterations, "Gibbs sweeps");
  cmd.add_option("--burn-in", a.burn_in, "Sweeps discarded before averaging");
  cmd.add_flag("--average-samples", a.average, "Keep the modal assignment after burn-in");
  cmd.add_option("--similarity", a.similarity, "Topic-to-lexicon similarity")
      ->check(CLI::IsMember({"overlap", "cosine"}));
  cmd.add_option("--tie-eps", a.tie_eps, "Score spread below which a topic is labeled others");
  cmd.add_flag("--uniform-topics", a.uniform_topics, "Weight topics equally instead of by token mass");
  cmd.add_flag("--weight-by-mass", a.weight_by_mass, "Weight per-language averages by token mass");
}

RunConfig to_config(const RunArgs& a) {
  RunConfig config;
  config.repos = load_repo_list(a.repos);
  if (!a.stopwords.empty()) {
    config.stopwords = StopwordSet::load(a.stopwords);
    config.stopwords_label = a.stopwords.filename().string();
  }
  if (!a.lexicon.empty()) config.lexicon = CategoryLexicon::load(a.lexicon);
  if (!a.anchor.empty()) {
    try {
      config.anchor_date = parse_date(a.anchor);
    } catch (const ParseError& e) {
      throw ConfigError(std::string("--anchor-date: ") + e.what());
    }
  }
  config.span_years = a.span_years;
  config.k_mode = a.k_mode == "pinned" ? KMode::Pinned : KMode::Sweep;
  config.pinned_k = {{Source::SourceCodeComments, a.k_comments},
                     {Source::TextualDocs, a.k_texts},
                     {Source::Commits, a.k_commits},
                     {Source::Issues, a.k_issues},
                     {Source::PullRequests, a.k_pulls}};
  config.k_min = a.k_min;
  config.k_max = a.k_max;
  if (a.alpha > 0.0) config.lda.alpha = a.alpha;
  config.lda.beta = a.beta;
  config.lda.iterations = a.iterations;
  config.lda.burn_in = a.burn_in;
  config.lda.average_samples = a.average;
  config.global_seed = a.seed;
  config.jobs = a.jobs;
  config.min_df = a.min_df;
  config.stem = a.stem;
  config.docstrings = a.docstrings == "on";
  config.similarity = a.similarity == "cosine" ? SimilarityMetric::Cosine : SimilarityMetric::Overlap;
  config.tie_eps = a.tie_eps;
  config.topic_weighting = a.uniform_topics ? TopicWeighting::Uniform : TopicWeighting::TokenMass;
  config.average_weighting = a.weight_by_mass ? AverageWeighting::ByMass : AverageWeighting::PerRepo;
  return config;
}

int cmd_run(const RunArgs& a) {
  const RunConfig config = to_config(a);
  auto provider = make_provider(a.artifacts, a.dump_dir, a.api_url);
  RunOutcome outcome = run(config, *provider);
  for (const fs::path& p : emit_reports(outcome.report, a.out)) spdlog::info("wrote {}", p.string());
  if (outcome.exit_code != 0) {
    print_error("no_eligible_repositories", "no repository passed the fork and pull request filters");
  }
  return outcome.exit_code;
}

int cmd_scan(const fs::path& root, const std::string& repo_id, const std::string& language) {
  auto lang = parse_language(language);
  if (!lang) throw ConfigError("unknown language: " + language);
  std::cout << snapshot_to_json(scan_repo(root, repo_id, *lang)) << '\n';
  return 0;
}

int cmd_comments(const fs::path& file, const std::string& language, bool docstrings) {
  std::optional<Language> lang = language.empty() ? language_for_path(file.string()) : parse_language(language);
  if (!lang) throw ConfigError("cannot infer a language for " + file.string());
  auto bytes = read_file_bytes(file);
  if (!bytes) throw IoError(file, "cannot read");
  ExtractOptions options;
  options.python_docstrings = docstrings;
  const ExtractResult result = extract_comments(sanitize_utf8(*bytes), *lang, options, file.string());
  nlohmann::json out = nlohmann::json::array();
  for (const CommentSpan& span : result.spans) {
    out.push_back({{"kind", to_string(span.kind)}, {"line", span.start_line}, {"text", span.text}});
  }
  std::cout << out.dump(2) << '\n';
  for (const std::string& w : result.warnings) spdlog::warn("{}", w);
  return 0;
}

int cmd_fetch(const std::string& repo_id, const fs::path& out_dir, const std::string& anchor, int span_years,
              const std::string& api_url) {
  auto provider = make_provider("api", {}, api_url);
  const Date anchor_date = anchor.empty() ? today_utc() : parse_date(anchor);
  const LoadResult loaded = load_artifacts(*provider, repo_id, RecencyWindow(anchor_date, span_years));
  const fs::path dir = out_dir / repo_id;
  fs::create_directories(dir);
  for (ArtifactKind kind : {ArtifactKind::Issue, ArtifactKind::PullRequest, ArtifactKind::Commit}) {
    const fs::path path = dir / dump_file_name(kind);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path, "cannot write");
    for (const ArtifactRecord& r : loaded.records) {
      if (r.kind == kind) out << to_dump_line(r) << '\n';
    }
  }
  const RepoMeta meta = provider->repo_meta(repo_id);
  nlohmann::json repo = nlohmann::json::object();
  if (meta.fork) repo["fork"] = *meta.fork;
  if (meta.pull_request_count) repo["pull_request_count"] = *meta.pull_request_count;
  std::ofstream(dir / "repo.json", std::ios::binary) << repo.dump(2) << '\n';
  spdlog::info("{}: {} records, {} malformed{}", repo_id, loaded.records.size(), loaded.malformed,
               loaded.partial ? ", partial" : "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine documentation types and sources from software repositories"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Analyze every repository in a list and write reports");
  add_run_options(*run_cmd, run_args);

  fs::path scan_root;
  std::string scan_id = "repo", scan_lang;
  auto* scan_cmd = app.add_subcommand("scan", "Print the file classification of one checkout");
  scan_cmd->add_option("path", scan_root, "Checkout root")->required();
  scan_cmd->add_option("--id", scan_id, "Repository id");
  scan_cmd->add_option("--language", scan_lang, "Primary language")->required();

  fs::path comment_file;
  std::string comment_lang, comment_docstrings = "on";
  auto* comments_cmd = app.add_subcommand("comments", "Print the comments of one source file");
  comments_cmd->add_option("file", comment_file, "Source file")->required()->check(CLI::ExistingFile);
  comments_cmd->add_option("--language", comment_lang, "Override the extension-based language");
  comments_cmd->add_option("--docstrings", comment_docstrings, "Treat Python docstrings as comments")
      ->check(CLI::IsMember({"on", "off"}));

  std::string fetch_repo, fetch_anchor, fetch_api;
  fs::path fetch_out = "dumps";
  int fetch_span = 3;
  auto* fetch_cmd = app.add_subcommand("fetch", "Download issues, pull requests and commits into JSONL dumps");
  fetch_cmd->add_option("repo", fetch_repo, "owner/name")->required();
  fetch_cmd->add_option("--dump-dir", fetch_out, "Dump root");
  fetch_cmd->add_option("--anchor-date", fetch_anchor, "Recency window anchor (YYYY-MM-DD)");
  fetch_cmd->add_option("--span-years", fetch_span, "Recency window length in years")->check(CLI::PositiveNumber);
  fetch_cmd->add_option("--api-url", fetch_api, "REST API base URL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  spdlog::set_default_logger(spdlog::stderr_color_mt("docmine"));
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);

  try {
    if (*run_cmd) return cmd_run(run_args);
    if (*scan_cmd) return cmd_scan(scan_root, scan_id, scan_lang);
    if (*comments_cmd) return cmd_comments(comment_file, comment_lang, comment_docstrings == "on");
    if (*fetch_cmd) return cmd_fetch(fetch_repo, fetch_out, fetch_anchor, fetch_span, fetch_api);
  } catch (const docmine::Error& e) {
    print_error(e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
  return 0;
}
