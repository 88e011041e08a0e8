#include "docmine/corpus_scanner.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "docmine/errors.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace docmine {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view basename_of(std::string_view path) {
  const auto slash = path.find_last_of("/\\");
  return slash == std::string_view::npos ? path : path.substr(slash + 1);
}

// Lowercased text after the final dot of the basename, or "" when there is none.
std::string extension_of(std::string_view path) {
  const std::string_view base = basename_of(path);
  const auto dot = base.rfind('.');
  if (dot == std::string_view::npos) return {};
  return lower(base.substr(dot + 1));
}

std::optional<FileCategory> category_for_extension(const std::string& ext) {
  if (ext == "txt" || ext == "md") return FileCategory::Textual;
  if (ext == "png" || ext == "jpg" || ext == "jpeg") return FileCategory::Images;
  if (ext == "xmi" || ext == "uml") return FileCategory::DesignDiagrams;
  if (ext == "cpp" || ext == "cs" || ext == "py" || ext == "java") return FileCategory::SourceCode;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(FileCategory category) {
  switch (category) {
    case FileCategory::Textual: return "textual";
    case FileCategory::Images: return "images";
    case FileCategory::DesignDiagrams: return "design_diagrams";
    case FileCategory::SourceCode: return "source_code";
    case FileCategory::Others: return "others";
  }
  return "others";
}

std::optional<FileCategory> parse_file_category(std::string_view text) {
  for (FileCategory c : kAllFileCategories) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

FileCategory classify_file(std::string_view relative_path) {
  if (auto by_ext = category_for_extension(extension_of(relative_path))) return *by_ext;
  const std::string base = lower(basename_of(relative_path));
  if (base.starts_with("readme") || base.starts_with("license")) return FileCategory::Textual;
  return FileCategory::Others;
}

std::optional<Language> language_for_path(std::string_view relative_path) {
  const std::string ext = extension_of(relative_path);
  if (ext == "cpp") return Language::Cpp;
  if (ext == "cs") return Language::CSharp;
  if (ext == "java") return Language::Java;
  if (ext == "py") return Language::Python;
  return std::nullopt;
}

RepoSnapshot scan_repo(const fs::path& root, std::string repo_id, Language primary_language) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw IoError(root, ec ? ec.message() : "not a readable directory");
  }

  RepoSnapshot snapshot;
  snapshot.repo_id = std::move(repo_id);
  snapshot.primary_language = primary_language;

  fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
  if (ec) throw IoError(root, ec.message());

  for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) {
      spdlog::warn("scan {}: {}", root.string(), ec.message());
      ec.clear();
      continue;
    }
    const fs::directory_entry& entry = *it;
    const fs::file_status link_status = entry.symlink_status(ec);
    if (ec) {
      ec.clear();
      continue;
    }
    if (fs::is_symlink(link_status)) {
      if (fs::is_directory(entry.status(ec))) it.disable_recursion_pending();
      ec.clear();
      continue;
    }
    if (entry.path().filename() == ".git") {
      if (fs::is_directory(link_status)) it.disable_recursion_pending();
      continue;
    }
    if (!fs::is_regular_file(link_status)) continue;

    FileRecord record;
    record.relative_path = entry.path().lexically_relative(root).generic_string();
    record.category = classify_file(record.relative_path);
    if (record.category == FileCategory::SourceCode) {
      record.language_hint = language_for_path(record.relative_path);
    }
    const auto size = entry.file_size(ec);
    std::ifstream probe(entry.path(), std::ios::binary);
    if (ec || !probe) {
      spdlog::warn("scan {}: cannot read {}", snapshot.repo_id, record.relative_path);
      record.byte_size = 0;
      ec.clear();
    } else {
      record.byte_size = size;
    }
    snapshot.files.push_back(std::move(record));
  }

  std::sort(snapshot.files.begin(), snapshot.files.end(),
            [](const FileRecord& a, const FileRecord& b) { return a.relative_path < b.relative_path; });
  return snapshot;
}

bool eligible_repo(const RepoSnapshot& snapshot) {
  return !snapshot.fork_flag && snapshot.pull_request_count > 0;
}

std::optional<std::string> read_file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) return std::nullopt;
  return bytes;
}

std::string sanitize_utf8(std::string_view bytes) {
  static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
  std::string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(bytes[k]); };
  while (i < n) {
    const unsigned char c = byte(i);
    std::size_t len = 0;
    unsigned char lo = 0x80, hi = 0xBF;
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    } else if (c >= 0xC2 && c <= 0xDF) {
      len = 2;
    } else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      if (c == 0xE0) lo = 0xA0;
      if (c == 0xED) hi = 0x9F;
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      if (c == 0xF0) lo = 0x90;
      if (c == 0xF4) hi = 0x8F;
    }
    bool valid = len != 0 && i + len <= n;
    if (valid) {
      for (std::size_t k = 1; k < len; ++k) {
        const unsigned char b = byte(i + k);
        const unsigned char min = k == 1 ? lo : 0x80;
        const unsigned char max = k == 1 ? hi : 0xBF;
        if (b < min || b > max) {
          valid = false;
          break;
        }
      }
    }
    if (valid) {
      out.append(bytes.substr(i, len));
      i += len;
    } else {
      out.append(kReplacement);
      ++i;
    }
  }
  return out;
}

std::vector<TextDocument> collect_textual_documents(const RepoSnapshot& snapshot, const fs::path& root) {
  std::vector<TextDocument> docs;
  for (const FileRecord& file : snapshot.files) {
    if (file.category != FileCategory::Textual) continue;
    auto bytes = read_file_bytes(root / file.relative_path);
    if (!bytes) {
      spdlog::warn("{}: textual file {} vanished or is unreadable, skipped", snapshot.repo_id,
                   file.relative_path);
      continue;
    }
    docs.push_back({file.relative_path, sanitize_utf8(*bytes)});
  }
  return docs;
}

std::string snapshot_to_json(const RepoSnapshot& snapshot) {
  json files = json::array();
  for (const FileRecord& f : snapshot.files) {
    files.push_back({
        {"path", f.relative_path},
        {"category", to_string(f.category)},
        {"language", f.language_hint ? json(to_string(*f.language_hint)) : json(nullptr)},
        {"byte_size", f.byte_size},
    });
  }
  json j = {
      {"repo_id", snapshot.repo_id},
      {"primary_language", to_string(snapshot.primary_language)},
      {"fork", snapshot.fork_flag},
      {"pull_request_count", snapshot.pull_request_count},
      {"files", std::move(files)},
  };
  return j.dump(2);
}

RepoSnapshot snapshot_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    RepoSnapshot s;
    s.repo_id = j.at("repo_id").get<std::string>();
    auto lang = parse_language(j.at("primary_language").get<std::string>());
    if (!lang) throw ParseError("unknown primary_language");
    s.primary_language = *lang;
    s.fork_flag = j.at("fork").get<bool>();
    s.pull_request_count = j.at("pull_request_count").get<std::uint64_t>();
    std::set<std::string> seen;
    for (const json& f : j.at("files")) {
      FileRecord r;
      r.relative_path = f.at("path").get<std::string>();
      auto cat = parse_file_category(f.at("category").get<std::string>());
      if (!cat) throw ParseError("unknown category for " + r.relative_path);
      r.category = *cat;
      if (!f.at("language").is_null()) {
        r.language_hint = parse_language(f.at("language").get<std::string>());
        if (!r.language_hint) throw ParseError("unknown language for " + r.relative_path);
      }
      if (r.language_hint.has_value() != (r.category == FileCategory::SourceCode)) {
        throw ParseError("language must be set exactly for source files: " + r.relative_path);
      }
      if (r.relative_path.empty() || r.relative_path.front() == '/') {
        throw ParseError("file path must be non-empty and relative");
      }
      if (!seen.insert(r.relative_path).second) throw ParseError("duplicate path " + r.relative_path);
      r.byte_size = f.at("byte_size").get<std::uint64_t>();
      s.files.push_back(std::move(r));
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("snapshot json: ") + e.what());
  }
}

}  // namespace docmine
