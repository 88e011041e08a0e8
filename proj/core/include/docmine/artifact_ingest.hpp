#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "docmine/timestamp.hpp"

namespace docmine {

enum class ArtifactKind { Issue, PullRequest, Commit };

inline constexpr std::array<ArtifactKind, 3> kAllArtifactKinds = {
    ArtifactKind::Issue, ArtifactKind::PullRequest, ArtifactKind::Commit};

std::string_view to_string(ArtifactKind kind);
/// Dump file name for a kind: issues.jsonl, pulls.jsonl, commits.jsonl.
std::string_view dump_file_name(ArtifactKind kind);

struct TextField {
  std::string name;    // title | body | comment | message
  std::string text;
  std::string origin;  // comments only: issue_comment | review_comment | commit_comment

  friend bool operator==(const TextField&, const TextField&) = default;
};

struct ArtifactRecord {
  ArtifactKind kind = ArtifactKind::Issue;
  std::string id;
  Timestamp created_at{};
  std::vector<TextField> texts;

  friend bool operator==(const ArtifactRecord&, const ArtifactRecord&) = default;
};

struct RecencyWindow {
  Date anchor_date;
  int span_years = 3;

  RecencyWindow(Date anchor, int span = 3);
  /// Inclusive lower bound: midnight UTC of anchor_date minus span_years.
  Timestamp start() const;
  bool contains(Timestamp ts) const { return ts >= start(); }
};

/// Repository metadata a provider may know (fork flag, number of pull requests).
struct RepoMeta {
  std::optional<bool> fork;
  std::optional<std::uint64_t> pull_request_count;
};

/// Raw output of one provider call, before the recency window is applied.
struct ProviderBatch {
  std::vector<ArtifactRecord> records;
  std::size_t malformed = 0;
  std::set<ArtifactKind> blank;  // kinds for which the provider returned nothing
  bool partial = false;          // retries were exhausted somewhere
  std::vector<std::string> warnings;
};

class ArtifactProvider {
 public:
  virtual ~ArtifactProvider() = default;
  virtual std::string name() const = 0;
  /// `window` is a hint; providers may return older records.
  virtual ProviderBatch fetch(const std::string& repo_id, const RecencyWindow& window) = 0;
  virtual RepoMeta repo_meta(const std::string& repo_id) = 0;
};

/// Reads `<dump_dir>/<repo_id>/{issues,pulls,commits}.jsonl` and optional `repo.json`.
class DumpProvider : public ArtifactProvider {
 public:
  explicit DumpProvider(std::filesystem::path dump_dir);
  std::string name() const override { return "dump"; }
  ProviderBatch fetch(const std::string& repo_id, const RecencyWindow& window) override;
  RepoMeta repo_meta(const std::string& repo_id) override;

 private:
  std::filesystem::path dump_dir_;
};

struct LoadResult {
  std::vector<ArtifactRecord> records;  // all inside the window
  std::size_t dropped_out_of_window = 0;
  std::size_t malformed = 0;
  std::set<ArtifactKind> blank;
  bool partial = false;
  std::string provider;
};

/// Fetches a repository's artifacts and keeps those created on or after the window
/// start. Records keep provider order.
LoadResult load_artifacts(ArtifactProvider& provider, const std::string& repo_id,
                          const RecencyWindow& window);

/// Non-empty field texts in (title, body, comments...) or (message, comments...) order.
std::vector<std::string> extract_fields(const ArtifactRecord& record);

/// Parses one dump line. Only whitelisted fields are read; anything else is ignored.
/// Throws ParseError for invalid JSON, a non-object, or a missing id / created_at.
ArtifactRecord parse_dump_line(ArtifactKind kind, std::string_view line);

/// Serializes a record in the dump format read by parse_dump_line.
std::string to_dump_line(const ArtifactRecord& record);

}  // namespace docmine
