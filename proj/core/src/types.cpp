#include "docmine/types.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace docmine {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(Language lang) {
  switch (lang) {
    case Language::Cpp: return "cpp";
    case Language::CSharp: return "csharp";
    case Language::Java: return "java";
    case Language::Python: return "python";
  }
  return "unknown";
}

std::optional<Language> parse_language(std::string_view text) {
  const std::string t = lower(text);
  if (t == "cpp" || t == "c++" || t == "cxx") return Language::Cpp;
  if (t == "csharp" || t == "c#" || t == "cs") return Language::CSharp;
  if (t == "java") return Language::Java;
  if (t == "python" || t == "py") return Language::Python;
  return std::nullopt;
}

std::string_view to_string(Source source) {
  switch (source) {
    case Source::SourceCodeComments: return "source_code_comments";
    case Source::TextualDocs: return "textual_docs";
    case Source::Commits: return "commits";
    case Source::Issues: return "issues";
    case Source::PullRequests: return "pull_requests";
  }
  return "unknown";
}

std::optional<Source> parse_source(std::string_view text) {
  for (Source s : kAllSources) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::string_view to_string(DocType type) {
  switch (type) {
    case DocType::ApiRelated: return "api_related";
    case DocType::FileRelated: return "file_related";
    case DocType::ProjectRelated: return "project_related";
    case DocType::LicenseRelated: return "license_related";
    case DocType::ErrorRelated: return "error_related";
    case DocType::Others: return "others";
  }
  return "unknown";
}

std::optional<DocType> parse_doc_type(std::string_view text) {
  for (DocType t : kAllDocTypes) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

}  // namespace docmine
