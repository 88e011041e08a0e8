#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "docmine/types.hpp"

namespace docmine {

enum class FileCategory { Textual, Images, DesignDiagrams, SourceCode, Others };

inline constexpr std::array<FileCategory, 5> kAllFileCategories = {
    FileCategory::Textual, FileCategory::Images, FileCategory::DesignDiagrams,
    FileCategory::SourceCode, FileCategory::Others};

std::string_view to_string(FileCategory category);
std::optional<FileCategory> parse_file_category(std::string_view text);

struct FileRecord {
  std::string relative_path;  // '/'-separated, relative to the repository root
  FileCategory category = FileCategory::Others;
  std::optional<Language> language_hint;  // set iff category == SourceCode
  std::uint64_t byte_size = 0;

  friend bool operator==(const FileRecord&, const FileRecord&) = default;
};

struct RepoSnapshot {
  std::string repo_id;
  Language primary_language = Language::Cpp;
  std::vector<FileRecord> files;  // sorted by relative_path, no duplicates
  bool fork_flag = false;
  std::uint64_t pull_request_count = 0;

  friend bool operator==(const RepoSnapshot&, const RepoSnapshot&) = default;
};

/// Maps a path to one of the five file categories. Extension rules (case-insensitive,
/// final dot-suffix of the basename) win over the readme/license basename rule.
FileCategory classify_file(std::string_view relative_path);

/// Source language implied by a source-code extension, if any.
std::optional<Language> language_for_path(std::string_view relative_path);

/// Walks `root` (skipping `.git` and symlinks) and classifies every regular file.
/// Throws IoError if `root` is missing or unreadable. fork_flag and pull_request_count
/// are left at their defaults; callers fill them from artifact metadata.
RepoSnapshot scan_repo(const std::filesystem::path& root, std::string repo_id,
                       Language primary_language);

/// Forks and repositories without pull requests are excluded from the study.
bool eligible_repo(const RepoSnapshot& snapshot);

struct TextDocument {
  std::string relative_path;
  std::string text;  // valid UTF-8
};

/// Reads every Textual file of the snapshot. Invalid UTF-8 is replaced with U+FFFD;
/// files that disappeared since the scan are skipped with a warning.
std::vector<TextDocument> collect_textual_documents(const RepoSnapshot& snapshot,
                                                    const std::filesystem::path& root);

/// Stable JSON form: repo_id, primary_language, fork, pull_request_count and files
/// (path, category, language or null, byte_size).
std::string snapshot_to_json(const RepoSnapshot& snapshot);
/// Throws ParseError on malformed input or a broken FileRecord invariant.
RepoSnapshot snapshot_from_json(std::string_view json);

/// Replaces every ill-formed UTF-8 sequence with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

/// Reads a whole file as bytes; nullopt if it cannot be opened.
std::optional<std::string> read_file_bytes(const std::filesystem::path& path);

}  // namespace docmine
