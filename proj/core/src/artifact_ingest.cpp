#include "docmine/artifact_ingest.hpp"

#include <spdlog/spdlog.h>

#include <fstream>
#include <span>
#include <string>

#include "docmine/errors.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace docmine {

namespace {

std::string id_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  if (value.is_number_unsigned()) return std::to_string(value.get<std::uint64_t>());
  return {};
}

std::string record_id(ArtifactKind kind, const json& j) {
  const char* primary = kind == ArtifactKind::Commit ? "sha" : "number";
  for (const char* key : {primary, "id"}) {
    if (auto it = j.find(key); it != j.end()) {
      std::string id = id_text(*it);
      if (!id.empty()) return id;
    }
  }
  throw ParseError(std::string("missing ") + primary);
}

const json* nested(const json& j, std::initializer_list<const char*> path) {
  const json* cur = &j;
  for (const char* key : path) {
    if (!cur->is_object()) return nullptr;
    auto it = cur->find(key);
    if (it == cur->end()) return nullptr;
    cur = &*it;
  }
  return cur;
}

std::string created_at_text(ArtifactKind kind, const json& j) {
  if (const json* v = nested(j, {"created_at"}); v && v->is_string()) return v->get<std::string>();
  if (kind == ArtifactKind::Commit) {
    for (auto path : {std::initializer_list<const char*>{"commit", "author", "date"},
                      std::initializer_list<const char*>{"commit", "committer", "date"}}) {
      if (const json* v = nested(j, path); v && v->is_string()) return v->get<std::string>();
    }
  }
  throw ParseError("missing created_at");
}

void push_text(ArtifactRecord& record, const char* name, const json* value) {
  if (value && value->is_string()) record.texts.push_back({name, value->get<std::string>(), {}});
}

// Accepts an array of strings or of objects with a "body"; a bare count (the API's
// integer "comments" field) carries no text.
void push_comments(ArtifactRecord& record, const json& j, const char* key, const char* origin) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) return;
  for (const json& c : *it) {
    const json* body = c.is_object() ? nested(c, {"body"}) : &c;
    if (body && body->is_string()) record.texts.push_back({"comment", body->get<std::string>(), origin});
  }
}

bool is_blank_line(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

struct DumpRead {
  std::vector<ArtifactRecord> records;
  std::size_t malformed = 0;
  bool present = false;
};

DumpRead read_dump(const fs::path& path, ArtifactKind kind, std::vector<std::string>& warnings) {
  DumpRead out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  out.present = true;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_line(line)) continue;
    if (kind == ArtifactKind::Issue) {
      // The issues listing also returns pull requests; those belong to pulls.jsonl.
      try {
        const json j = json::parse(line);
        if (j.is_object() && j.contains("pull_request")) continue;
      } catch (const json::exception&) {
      }
    }
    try {
      out.records.push_back(parse_dump_line(kind, line));
    } catch (const ParseError& e) {
      ++out.malformed;
      warnings.push_back(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::Issue: return "issue";
    case ArtifactKind::PullRequest: return "pull_request";
    case ArtifactKind::Commit: return "commit";
  }
  return "issue";
}

std::string_view dump_file_name(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::Issue: return "issues.jsonl";
    case ArtifactKind::PullRequest: return "pulls.jsonl";
    case ArtifactKind::Commit: return "commits.jsonl";
  }
  return "issues.jsonl";
}

RecencyWindow::RecencyWindow(Date anchor, int span) : anchor_date(anchor), span_years(span) {
  if (span_years < 1) throw ContractError("recency window span_years must be >= 1");
  if (!anchor_date.ok()) throw ContractError("recency window anchor date is invalid");
}

Timestamp RecencyWindow::start() const {
  return start_of_day(subtract_years(anchor_date, span_years));
}

ArtifactRecord parse_dump_line(ArtifactKind kind, std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid json: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("dump entry is not an object");

  ArtifactRecord record;
  record.kind = kind;
  record.id = record_id(kind, j);
  record.created_at = parse_timestamp(created_at_text(kind, j));

  if (kind == ArtifactKind::Commit) {
    const json* message = nested(j, {"message"});
    if (!message || !message->is_string()) message = nested(j, {"commit", "message"});
    push_text(record, "message", message);
    push_comments(record, j, "comments", "commit_comment");
  } else {
    push_text(record, "title", nested(j, {"title"}));
    push_text(record, "body", nested(j, {"body"}));
    push_comments(record, j, "comments", "issue_comment");
    if (kind == ArtifactKind::PullRequest) push_comments(record, j, "review_comments", "review_comment");
  }
  return record;
}

std::string to_dump_line(const ArtifactRecord& record) {
  json j = json::object();
  const bool numeric = !record.id.empty() &&
                       record.id.find_first_not_of("0123456789") == std::string::npos &&
                       record.id.size() < 19;
  const char* id_key = record.kind == ArtifactKind::Commit ? "sha" : "number";
  if (numeric && record.kind != ArtifactKind::Commit) {
    j[id_key] = std::stoull(record.id);
  } else {
    j[id_key] = record.id;
  }
  j["created_at"] = format_timestamp(record.created_at);
  json comments = json::array();
  json review_comments = json::array();
  for (const TextField& field : record.texts) {
    if (field.name == "comment") {
      (field.origin == "review_comment" ? review_comments : comments).push_back({{"body", field.text}});
    } else {
      j[field.name] = field.text;
    }
  }
  j["comments"] = std::move(comments);
  if (record.kind == ArtifactKind::PullRequest) j["review_comments"] = std::move(review_comments);
  return j.dump();
}

std::vector<std::string> extract_fields(const ArtifactRecord& record) {
  static constexpr std::string_view kIssueOrder[] = {"title", "body", "comment"};
  static constexpr std::string_view kCommitOrder[] = {"message", "comment"};
  std::span<const std::string_view> order =
      record.kind == ArtifactKind::Commit ? std::span<const std::string_view>(kCommitOrder)
                                          : std::span<const std::string_view>(kIssueOrder);
  std::vector<std::string> out;
  for (std::string_view name : order) {
    for (const TextField& field : record.texts) {
      if (field.name == name && !field.text.empty()) out.push_back(field.text);
    }
  }
  return out;
}

DumpProvider::DumpProvider(fs::path dump_dir) : dump_dir_(std::move(dump_dir)) {}

ProviderBatch DumpProvider::fetch(const std::string& repo_id, const RecencyWindow&) {
  ProviderBatch batch;
  const fs::path dir = dump_dir_ / repo_id;
  for (ArtifactKind kind : kAllArtifactKinds) {
    const fs::path path = dir / dump_file_name(kind);
    DumpRead read = read_dump(path, kind, batch.warnings);
    if (!read.present) batch.warnings.push_back(path.string() + ": missing dump file");
    if (read.records.empty()) batch.blank.insert(kind);
    batch.malformed += read.malformed;
    for (ArtifactRecord& r : read.records) batch.records.push_back(std::move(r));
  }
  return batch;
}

RepoMeta DumpProvider::repo_meta(const std::string& repo_id) {
  RepoMeta meta;
  const fs::path dir = dump_dir_ / repo_id;
  std::ifstream in(dir / "repo.json", std::ios::binary);
  if (in) {
    try {
      const json j = json::parse(in);
      if (auto it = j.find("fork"); it != j.end() && it->is_boolean()) meta.fork = it->get<bool>();
      if (auto it = j.find("pull_request_count"); it != j.end() && it->is_number_unsigned()) {
        meta.pull_request_count = it->get<std::uint64_t>();
      }
    } catch (const json::exception& e) {
      spdlog::warn("{}: unreadable repo.json: {}", repo_id, e.what());
    }
  }
  if (!meta.pull_request_count) {
    std::vector<std::string> ignored;
    const DumpRead pulls = read_dump(dir / dump_file_name(ArtifactKind::PullRequest),
                                     ArtifactKind::PullRequest, ignored);
    meta.pull_request_count = pulls.records.size();
  }
  return meta;
}

LoadResult load_artifacts(ArtifactProvider& provider, const std::string& repo_id,
                          const RecencyWindow& window) {
  ProviderBatch batch = provider.fetch(repo_id, window);
  for (const std::string& w : batch.warnings) spdlog::warn("{}: {}", repo_id, w);

  LoadResult result;
  result.provider = provider.name();
  result.malformed = batch.malformed;
  result.blank = std::move(batch.blank);
  result.partial = batch.partial;
  const Timestamp start = window.start();
  for (ArtifactRecord& record : batch.records) {
    if (record.created_at >= start) {
      result.records.push_back(std::move(record));
    } else {
      ++result.dropped_out_of_window;
    }
  }
  return result;
}

}  // namespace docmine
