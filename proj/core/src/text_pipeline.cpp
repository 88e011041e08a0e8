#include "docmine/text_pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <map>

#include "docmine/errors.hpp"

namespace docmine {

namespace embedded {
extern const std::string_view kStopwords;
}

namespace {

bool ascii_alnum(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::isalnum(u);
}
bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
bool ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool looks_like_url(std::string_view chunk) {
  if (chunk.find("://") != std::string_view::npos) return true;
  std::string head;
  for (char c : chunk.substr(0, 4)) head.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return head == "www.";
}

// Splits an alphanumeric run at camelCase boundaries: "NullPointerException" ->
// Null|Pointer|Exception, "HTTPServer" -> HTTP|Server, "Base64Encoder" -> Base64|Encoder.
void split_camel(std::string_view run, std::vector<std::string_view>& parts) {
  std::size_t start = 0;
  for (std::size_t i = 1; i < run.size(); ++i) {
    const char prev = run[i - 1];
    const char cur = run[i];
    const bool lower_to_upper = ascii_upper(cur) && (ascii_lower(prev) || ascii_digit(prev));
    const bool acronym_end = ascii_upper(prev) && ascii_upper(cur) && i + 1 < run.size() &&
                             ascii_lower(run[i + 1]);
    if (lower_to_upper || acronym_end) {
      parts.push_back(run.substr(start, i - start));
      start = i;
    }
  }
  parts.push_back(run.substr(start));
}

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return ascii_digit(c); });
}

bool ends_with(std::string_view s, std::string_view suffix) { return s.ends_with(suffix); }

}  // namespace

const StopwordSet& StopwordSet::english() {
  static const StopwordSet set = parse(embedded::kStopwords);
  return set;
}

StopwordSet StopwordSet::parse(std::string_view text) {
  std::unordered_set<std::string> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    while (!line.empty() && is_space(line.front())) line.remove_prefix(1);
    while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
    if (!line.empty()) {
      std::string word(line);
      std::transform(word.begin(), word.end(), word.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      words.insert(std::move(word));
    }
    pos = nl + 1;
  }
  return StopwordSet(std::move(words));
}

StopwordSet StopwordSet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open stopword file");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse(text);
}

std::string light_stem(std::string_view token) {
  std::string t(token);
  if (t.size() > 4 && ends_with(t, "ies")) return t.substr(0, t.size() - 3) + "y";
  if (ends_with(t, "sses")) return t.substr(0, t.size() - 2);
  if (t.size() > 5 && ends_with(t, "ing")) return t.substr(0, t.size() - 3);
  if (t.size() > 4 && ends_with(t, "ed")) return t.substr(0, t.size() - 2);
  if (t.size() > 3 && ends_with(t, "s") && !ends_with(t, "ss") && !ends_with(t, "us") &&
      !ends_with(t, "is")) {
    return t.substr(0, t.size() - 1);
  }
  return t;
}

std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options) {
  std::vector<std::string> tokens;
  std::vector<std::string_view> parts;
  auto accept = [&](std::string token) {
    if (token.size() < 2 || all_digits(token)) return;
    if (options.stopwords && options.stopwords->contains(token)) return;
    tokens.push_back(std::move(token));
  };

  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t chunk_start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    const std::string_view chunk = text.substr(chunk_start, i - chunk_start);
    if (chunk.empty() || looks_like_url(chunk)) continue;

    std::size_t j = 0;
    while (j < chunk.size()) {
      while (j < chunk.size() && !ascii_alnum(chunk[j])) ++j;
      const std::size_t run_start = j;
      while (j < chunk.size() && ascii_alnum(chunk[j])) ++j;
      if (j == run_start) continue;
      parts.clear();
      split_camel(chunk.substr(run_start, j - run_start), parts);
      for (std::string_view part : parts) {
        std::string token(part);
        std::transform(token.begin(), token.end(), token.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (options.stem && !(options.stopwords && options.stopwords->contains(token))) {
          token = light_stem(token);
        }
        accept(std::move(token));
      }
    }
  }
  return tokens;
}

std::uint32_t Vocabulary::intern(const std::string& token) {
  auto [it, inserted] = ids_.try_emplace(token, static_cast<std::uint32_t>(terms_.size()));
  if (inserted) terms_.push_back(token);
  return it->second;
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Corpus::total_tokens() const {
  std::uint64_t total = 0;
  for (const SparseDoc& doc : docs) {
    for (const TermCount& tc : doc) total += tc.count;
  }
  return total;
}

std::uint32_t Corpus::doc_length(std::size_t d) const {
  std::uint32_t n = 0;
  for (const TermCount& tc : docs.at(d)) n += tc.count;
  return n;
}

Corpus build_corpus(const std::vector<TokenizedDocument>& docs, const CorpusOptions& options) {
  // Document frequencies decide which terms survive min_df pruning.
  std::unordered_map<std::string, std::uint32_t> df;
  if (options.min_df > 1) {
    for (const TokenizedDocument& doc : docs) {
      std::unordered_set<std::string_view> seen(doc.tokens.begin(), doc.tokens.end());
      for (std::string_view t : seen) ++df[std::string(t)];
    }
  }

  Corpus corpus;
  for (const TokenizedDocument& doc : docs) {
    std::vector<const std::string*> kept;
    for (const std::string& t : doc.tokens) {
      if (options.min_df > 1 && df[t] < options.min_df) continue;
      kept.push_back(&t);
    }
    if (kept.empty()) {
      ++corpus.dropped_empty;
      continue;
    }
    std::map<std::uint32_t, std::uint32_t> counts;
    for (const std::string* t : kept) ++counts[corpus.vocabulary.intern(*t)];
    SparseDoc sparse;
    sparse.reserve(counts.size());
    for (auto [term, count] : counts) sparse.push_back({term, count});
    corpus.docs.push_back(std::move(sparse));
    corpus.doc_meta.push_back({doc.repo_id, doc.source});
  }
  if (corpus.docs.empty()) throw EmptyCorpusError();
  return corpus;
}

}  // namespace docmine
