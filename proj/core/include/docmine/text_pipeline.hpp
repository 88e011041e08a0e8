#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "docmine/types.hpp"

namespace docmine {

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  /// The shipped English list.
  static const StopwordSet& english();
  /// One token per line, UTF-8; blank lines and surrounding whitespace ignored.
  static StopwordSet parse(std::string_view text);
  static StopwordSet load(const std::filesystem::path& path);

  bool contains(std::string_view token) const { return words_.contains(std::string(token)); }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct TokenizerOptions {
  const StopwordSet* stopwords = &StopwordSet::english();
  bool stem = false;  // light English suffix stripping
};

/// Identifier-aware bag-of-words tokenizer: drops URLs, splits on non-alphanumeric
/// characters and on camelCase/snake_case boundaries, lowercases, and removes tokens
/// shorter than two characters, pure numbers, and stopwords.
std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options = {});

/// Suffix stemmer used when TokenizerOptions::stem is set.
std::string light_stem(std::string_view token);

struct TokenizedDocument {
  Source source = Source::TextualDocs;
  std::string repo_id;
  std::vector<std::string> tokens;
};

class Vocabulary {
 public:
  /// Returns the id of `token`, assigning the next id on first sight.
  std::uint32_t intern(const std::string& token);
  std::optional<std::uint32_t> find(std::string_view token) const;
  const std::string& term(std::uint32_t id) const { return terms_.at(id); }
  const std::vector<std::string>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

struct TermCount {
  std::uint32_t term = 0;
  std::uint32_t count = 0;
  friend bool operator==(const TermCount&, const TermCount&) = default;
};

/// Sparse bag of words, entries sorted by term id.
using SparseDoc = std::vector<TermCount>;

struct DocMeta {
  std::string repo_id;
  Source source = Source::TextualDocs;
};

struct Corpus {
  Vocabulary vocabulary;
  std::vector<SparseDoc> docs;
  std::vector<DocMeta> doc_meta;
  std::size_t dropped_empty = 0;

  std::uint64_t total_tokens() const;
  std::uint32_t doc_length(std::size_t d) const;
};

struct CorpusOptions {
  /// Terms found in fewer documents are pruned. 1 keeps everything.
  std::uint32_t min_df = 1;
};

/// Assembles a bag-of-words corpus. Vocabulary ids follow first-seen order. Documents
/// with no tokens (before or after pruning) are dropped and counted. Throws
/// EmptyCorpusError when nothing is left.
Corpus build_corpus(const std::vector<TokenizedDocument>& docs, const CorpusOptions& options = {});

}  // namespace docmine
