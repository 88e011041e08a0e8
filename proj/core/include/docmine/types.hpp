#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace docmine {

/// The four languages whose repositories (and source comments) are studied.
enum class Language { Cpp, CSharp, Java, Python };

inline constexpr std::array<Language, 4> kAllLanguages = {
    Language::Cpp, Language::CSharp, Language::Java, Language::Python};

std::string_view to_string(Language lang);
/// Accepts "cpp"/"c++", "csharp"/"c#"/"cs", "java", "python"/"py" in any case.
std::optional<Language> parse_language(std::string_view text);

/// The five documentation sources analyzed with topic models.
enum class Source { SourceCodeComments, TextualDocs, Commits, Issues, PullRequests };

inline constexpr std::array<Source, 5> kAllSources = {
    Source::SourceCodeComments, Source::TextualDocs, Source::Commits, Source::Issues,
    Source::PullRequests};

std::string_view to_string(Source source);
std::optional<Source> parse_source(std::string_view text);

/// Documentation types recognized by the automated classifier. Architecture-related
/// documentation has no keyword signal and is not part of this set.
enum class DocType { ApiRelated, FileRelated, ProjectRelated, LicenseRelated, ErrorRelated, Others };

inline constexpr std::array<DocType, 6> kAllDocTypes = {
    DocType::ApiRelated,     DocType::FileRelated,  DocType::ProjectRelated,
    DocType::LicenseRelated, DocType::ErrorRelated, DocType::Others};

/// The five lexicon-backed types, in tie-break order.
inline constexpr std::array<DocType, 5> kLabeledDocTypes = {
    DocType::ApiRelated, DocType::FileRelated, DocType::ProjectRelated, DocType::LicenseRelated,
    DocType::ErrorRelated};

std::string_view to_string(DocType type);
std::optional<DocType> parse_doc_type(std::string_view text);

constexpr std::size_t index_of(Source s) { return static_cast<std::size_t>(s); }
constexpr std::size_t index_of(DocType t) { return static_cast<std::size_t>(t); }
constexpr std::size_t index_of(Language l) { return static_cast<std::size_t>(l); }

}  // namespace docmine
