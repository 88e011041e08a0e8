#include "docmine/comment_extractor.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "docmine/errors.hpp"

namespace docmine {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    const auto nl = s.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(s.substr(start));
      break;
    }
    lines.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

// Joins lines, dropping leading and trailing blank ones.
std::string join_trimmed(const std::vector<std::string>& lines) {
  std::size_t first = 0;
  std::size_t last = lines.size();
  while (first < last && lines[first].empty()) ++first;
  while (last > first && lines[last - 1].empty()) --last;
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (i != first) out.push_back('\n');
    out += lines[i];
  }
  return out;
}

// Character cursor with 1-based line tracking.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }
  std::size_t pos() const { return pos_; }
  int line() const { return line_; }
  std::string_view slice(std::size_t from, std::size_t to) const {
    return text_.substr(from, to - from);
  }
  std::size_t count_run(char c) const {
    std::size_t n = 0;
    while (peek(n) == c) ++n;
    return n;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

std::string clean_line_comment(std::string_view body, char marker) {
  std::size_t i = 0;
  while (i < body.size() && body[i] == marker) ++i;
  if (marker == '/' && i < body.size() && body[i] == '!') ++i;
  std::string text(trim(body.substr(i)));
  // C++ line splices keep the comment going; drop the backslash-newline joints.
  std::string out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '\\' && k + 1 < text.size() && (text[k + 1] == '\n' || text[k + 1] == '\r')) {
      k += text[k + 1] == '\r' && k + 2 < text.size() && text[k + 2] == '\n' ? 2 : 1;
      continue;
    }
    if (text[k] == '\r') continue;
    out.push_back(text[k]);
  }
  return out;
}

// Strips the opener's extra stars/bang, closing star runs, and " * " line decoration.
std::string clean_block_comment(std::string_view inner) {
  std::size_t i = 0;
  while (i < inner.size() && inner[i] == '*') ++i;
  if (i < inner.size() && inner[i] == '!') ++i;
  inner.remove_prefix(i);
  while (!inner.empty() && inner.back() == '*') inner.remove_suffix(1);

  std::vector<std::string> lines;
  for (std::string_view line : split_lines(inner)) {
    std::string_view t = trim(line);
    if (!t.empty() && t.front() == '*') {
      std::size_t k = 0;
      while (k < t.size() && t[k] == '*') ++k;
      t = trim(t.substr(k));
    }
    lines.emplace_back(t);
  }
  return join_trimmed(lines);
}

// --- C, C++, C#, Java ---------------------------------------------------------------

class CFamilyLexer {
 public:
  CFamilyLexer(std::string_view text, Language lang, std::string_view file, ExtractResult& out)
      : cur_(text), lang_(lang), file_(file), out_(out) {}

  void run() {
    while (!cur_.done()) step();
  }

 private:
  void step() {
    const char c = cur_.peek();
    if (c == '/' && cur_.peek(1) == '/') return line_comment();
    if (c == '/' && cur_.peek(1) == '*') return block_comment();
    if (c == '"') return lang_ == Language::Cpp ? cpp_string() : quoted_string();
    if (c == '\'') return char_literal();
    if (lang_ == Language::CSharp && (c == '@' || c == '$')) return csharp_prefixed();
    if (is_digit(c) || (c == '.' && is_digit(cur_.peek(1)))) return number();
    if (is_ident_start(c)) return identifier();
    cur_.advance();
  }

  void emit(CommentKind kind, std::string text, int line) {
    out_.spans.push_back({std::string(file_), kind, std::move(text), line});
  }

  void warn(const std::string& message, int line) {
    out_.warnings.push_back(std::string(file_) + ":" + std::to_string(line) + ": " + message);
  }

  void line_comment() {
    const int line = cur_.line();
    cur_.advance(2);
    const std::size_t start = cur_.pos();
    while (!cur_.done() && cur_.peek() != '\n') {
      if (lang_ == Language::Cpp && cur_.peek() == '\\' &&
          (cur_.peek(1) == '\n' || (cur_.peek(1) == '\r' && cur_.peek(2) == '\n'))) {
        cur_.advance(cur_.peek(1) == '\r' ? 3 : 2);
        continue;
      }
      cur_.advance();
    }
    emit(CommentKind::Line, clean_line_comment(cur_.slice(start, cur_.pos()), '/'), line);
  }

  void block_comment() {
    const int line = cur_.line();
    cur_.advance(2);
    const std::size_t start = cur_.pos();
    while (!cur_.done() && !cur_.starts_with("*/")) cur_.advance();
    const std::size_t end = cur_.pos();
    if (cur_.done()) {
      warn("unterminated block comment", line);
    } else {
      cur_.advance(2);
    }
    emit(CommentKind::Block, clean_block_comment(cur_.slice(start, end)), line);
  }

  // Ordinary escaped literal ending at `quote`; a raw newline ends it too (malformed).
  void escaped_literal(char quote) {
    cur_.advance();
    while (!cur_.done()) {
      const char c = cur_.peek();
      if (c == '\\') {
        cur_.advance(2);
      } else if (c == quote) {
        cur_.advance();
        return;
      } else if (c == '\n') {
        return;
      } else {
        cur_.advance();
      }
    }
  }

  void char_literal() { escaped_literal('\''); }

  void cpp_string() { escaped_literal('"'); }

  // Java text blocks and C# raw literals open with three or more quotes.
  void quoted_string() {
    const std::size_t run = cur_.count_run('"');
    if (run >= 3) {
      const int line = cur_.line();
      const std::size_t width = lang_ == Language::Java ? 3 : run;
      cur_.advance(width);
      while (!cur_.done()) {
        if (lang_ == Language::Java && cur_.peek() == '\\') {
          cur_.advance(2);
          continue;
        }
        if (cur_.peek() == '"' && cur_.count_run('"') >= width) {
          cur_.advance(cur_.count_run('"'));
          return;
        }
        cur_.advance();
      }
      warn("unterminated multi-line string", line);
      return;
    }
    if (run == 2) {
      cur_.advance(2);  // ""
      return;
    }
    escaped_literal('"');
  }

  void number() {
    const bool hex = cur_.peek() == '0' && (cur_.peek(1) == 'x' || cur_.peek(1) == 'X');
    char prev = '\0';
    while (!cur_.done()) {
      const char c = cur_.peek();
      const bool exp_sign = (c == '+' || c == '-') &&
                            (hex ? (prev == 'p' || prev == 'P')
                                 : (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P'));
      const bool separator = c == '\'' && lang_ == Language::Cpp &&
                             std::isxdigit(static_cast<unsigned char>(cur_.peek(1)));
      if (is_ident_char(c) || c == '.' || exp_sign || separator) {
        prev = c;
        cur_.advance();
      } else {
        break;
      }
    }
  }

  void identifier() {
    const std::size_t start = cur_.pos();
    while (!cur_.done() && is_ident_char(cur_.peek())) cur_.advance();
    const std::string_view word = cur_.slice(start, cur_.pos());
    if (lang_ == Language::Cpp && cur_.peek() == '"' &&
        (word == "R" || word == "LR" || word == "uR" || word == "UR" || word == "u8R")) {
      cpp_raw_string();
    }
  }

  // R"delim( ... )delim"
  void cpp_raw_string() {
    const int line = cur_.line();
    cur_.advance();  // opening quote
    const std::size_t dstart = cur_.pos();
    while (!cur_.done() && cur_.peek() != '(' && cur_.peek() != '\n' &&
           cur_.pos() - dstart <= 16) {
      cur_.advance();
    }
    if (cur_.peek() != '(') {
      warn("malformed raw string delimiter", line);
      return;
    }
    const std::string closing = ")" + std::string(cur_.slice(dstart, cur_.pos())) + "\"";
    cur_.advance();
    while (!cur_.done() && !cur_.starts_with(closing)) cur_.advance();
    if (cur_.done()) {
      warn("unterminated raw string", line);
      return;
    }
    cur_.advance(closing.size());
  }

  // C# @"..", $"..", $@"..", @$"..", $$"""..."""
  void csharp_prefixed() {
    std::size_t n = 0;
    bool verbatim = false;
    bool interpolated = false;
    while (cur_.peek(n) == '@' || cur_.peek(n) == '$') {
      verbatim |= cur_.peek(n) == '@';
      interpolated |= cur_.peek(n) == '$';
      ++n;
    }
    if (cur_.peek(n) != '"') {
      cur_.advance(n);
      return;
    }
    cur_.advance(n);
    if (cur_.count_run('"') >= 3) {
      quoted_string();
      return;
    }
    csharp_string(verbatim, interpolated);
  }

  void csharp_string(bool verbatim, bool interpolated) {
    const int line = cur_.line();
    cur_.advance();  // opening quote
    while (!cur_.done()) {
      const char c = cur_.peek();
      if (verbatim && c == '"') {
        if (cur_.peek(1) == '"') {
          cur_.advance(2);
          continue;
        }
        cur_.advance();
        return;
      }
      if (!verbatim && c == '\\') {
        cur_.advance(2);
        continue;
      }
      if (!verbatim && (c == '"' || c == '\n')) {
        if (c == '"') cur_.advance();
        return;
      }
      if (interpolated && c == '{') {
        if (cur_.peek(1) == '{') {
          cur_.advance(2);
          continue;
        }
        interpolation_hole();
        continue;
      }
      cur_.advance();
    }
    warn("unterminated string", line);
  }

  // Code inside { } of an interpolated string; nested literals are skipped whole.
  void interpolation_hole() {
    cur_.advance();  // '{'
    int depth = 1;
    while (!cur_.done() && depth > 0) {
      const char c = cur_.peek();
      if (c == '{') {
        ++depth;
        cur_.advance();
      } else if (c == '}') {
        --depth;
        cur_.advance();
      } else if (c == '"') {
        quoted_string();
      } else if (c == '\'') {
        char_literal();
      } else if (c == '@' || c == '$') {
        csharp_prefixed();
      } else {
        cur_.advance();
      }
    }
  }

  Cursor cur_;
  Language lang_;
  std::string_view file_;
  ExtractResult& out_;
};

// --- Python --------------------------------------------------------------------------

std::string clean_docstring(std::string_view inner) {
  std::vector<std::string_view> raw = split_lines(inner);
  std::size_t indent = std::string_view::npos;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const auto first = raw[i].find_first_not_of(" \t");
    if (first != std::string_view::npos) indent = std::min(indent, first);
  }
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::string_view line = raw[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (i == 0) {
      line = trim(line);
    } else {
      if (indent != std::string_view::npos) line.remove_prefix(std::min(indent, line.size()));
      const auto last = line.find_last_not_of(" \t");
      line = last == std::string_view::npos ? std::string_view{} : line.substr(0, last + 1);
    }
    lines.emplace_back(line);
  }
  return join_trimmed(lines);
}

class PythonLexer {
 public:
  PythonLexer(std::string_view text, const ExtractOptions& options, std::string_view file,
              ExtractResult& out)
      : cur_(text), options_(options), file_(file), out_(out) {}

  void run() {
    if (cur_.starts_with("#!")) {  // shebang
      while (!cur_.done() && cur_.peek() != '\n') cur_.advance();
    }
    while (!cur_.done()) step();
    end_logical_line();
  }

 private:
  struct Candidate {
    std::string text;
    int line = 0;
  };

  void step() {
    const char c = cur_.peek();
    if (c == '#') return comment();
    if (c == '\\' && (cur_.peek(1) == '\n' || cur_.peek(1) == '\r')) {
      cur_.advance(cur_.peek(1) == '\r' ? 3 : 2);  // explicit line joining
      return;
    }
    if (c == '\n') {
      cur_.advance();
      if (depth_ == 0) end_logical_line();
      return;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
      cur_.advance();
      return;
    }
    if (c == '"' || c == '\'') return string_literal({});
    if (is_ident_start(c) || static_cast<unsigned char>(c) >= 0x80) return name();
    if (is_digit(c)) {
      while (!cur_.done() && (is_ident_char(cur_.peek()) || cur_.peek() == '.')) cur_.advance();
      token(TokenClass::Other);
      return;
    }
    if (c == '(' || c == '[' || c == '{') ++depth_;
    if ((c == ')' || c == ']' || c == '}') && depth_ > 0) --depth_;
    cur_.advance();
    if (c == ';' && depth_ == 0) {
      end_logical_line();
      return;
    }
    token(c == ':' ? TokenClass::Colon : TokenClass::Other);
  }

  enum class TokenClass { Name, Def, String, Colon, Other };

  // Feeds one significant token into the statement tracker.
  void token(TokenClass cls, std::optional<Candidate> doc = std::nullopt) {
    if (candidate_) candidate_.reset();  // something follows the string: not a docstring
    const bool first = tokens_in_line_ == 0;
    if (first && cls == TokenClass::Def) header_ = true;
    const bool after_header_colon = header_ && last_was_colon_ && depth_ == 0;
    if (doc && ((first && expect_doc_) || after_header_colon)) candidate_ = std::move(doc);
    last_was_colon_ = cls == TokenClass::Colon && depth_ == 0;
    ++tokens_in_line_;
  }

  void end_logical_line() {
    if (candidate_) {
      out_.spans.push_back(
          {std::string(file_), CommentKind::DocString, std::move(candidate_->text), candidate_->line});
      candidate_.reset();
    }
    if (tokens_in_line_ > 0) expect_doc_ = header_ && last_was_colon_;
    tokens_in_line_ = 0;
    header_ = false;
    last_was_colon_ = false;
  }

  void comment() {
    const int line = cur_.line();
    const std::size_t start = cur_.pos();
    while (!cur_.done() && cur_.peek() != '\n') cur_.advance();
    std::string text = clean_line_comment(cur_.slice(start, cur_.pos()), '#');
    out_.spans.push_back({std::string(file_), CommentKind::Line, std::move(text), line});
  }

  void name() {
    const std::size_t start = cur_.pos();
    while (!cur_.done() && (is_ident_char(cur_.peek()) || static_cast<unsigned char>(cur_.peek()) >= 0x80)) {
      cur_.advance();
    }
    const std::string_view word = cur_.slice(start, cur_.pos());
    if ((cur_.peek() == '"' || cur_.peek() == '\'') && is_string_prefix(word)) {
      return string_literal(word);
    }
    const bool header_word = word == "def" || word == "class" ||
                             (word == "async" && tokens_in_line_ == 0);
    token(header_word && tokens_in_line_ == 0 ? TokenClass::Def : TokenClass::Name);
  }

  static bool is_string_prefix(std::string_view word) {
    if (word.empty() || word.size() > 2) return false;
    std::string p;
    for (char c : word) p.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return p == "r" || p == "u" || p == "b" || p == "f" || p == "rb" || p == "br" ||
           p == "fr" || p == "rf";
  }

  void string_literal(std::string_view prefix) {
    const int line = cur_.line();
    const char quote = cur_.peek();
    const bool triple = cur_.peek(1) == quote && cur_.peek(2) == quote;
    const std::size_t width = triple ? 3 : 1;
    cur_.advance(width);
    const std::size_t start = cur_.pos();
    std::size_t end = start;
    bool closed = false;
    while (!cur_.done()) {
      const char c = cur_.peek();
      if (c == '\\') {
        cur_.advance(2);
        continue;
      }
      if (!triple && c == '\n') break;
      if (c == quote && (!triple || (cur_.peek(1) == quote && cur_.peek(2) == quote))) {
        end = cur_.pos();
        cur_.advance(width);
        closed = true;
        break;
      }
      cur_.advance();
    }
    if (!closed) {
      end = cur_.pos();
      if (triple) {
        out_.warnings.push_back(std::string(file_) + ":" + std::to_string(line) +
                                ": unterminated triple-quoted string");
      }
    }

    std::string lower_prefix;
    for (char c : prefix) lower_prefix.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    const bool doc_capable = triple && lower_prefix.find_first_of("bf") == std::string::npos;
    if (doc_capable && options_.python_docstrings) {
      token(TokenClass::String, Candidate{clean_docstring(cur_.slice(start, end)), line});
    } else {
      token(TokenClass::String);
    }
  }

  Cursor cur_;
  const ExtractOptions& options_;
  std::string_view file_;
  ExtractResult& out_;

  int depth_ = 0;
  int tokens_in_line_ = 0;
  bool header_ = false;
  bool last_was_colon_ = false;
  bool expect_doc_ = true;  // module docstring position
  std::optional<Candidate> candidate_;
};

}  // namespace

std::string_view to_string(CommentKind kind) {
  switch (kind) {
    case CommentKind::Line: return "line";
    case CommentKind::Block: return "block";
    case CommentKind::DocString: return "docstring";
  }
  return "line";
}

ExtractResult extract_comments(std::string_view source_text, Language language,
                               const ExtractOptions& options, std::string_view file) {
  ExtractResult result;
  switch (language) {
    case Language::Cpp:
    case Language::CSharp:
    case Language::Java:
      CFamilyLexer(source_text, language, file, result).run();
      return result;
    case Language::Python:
      PythonLexer(source_text, options, file, result).run();
      return result;
  }
  throw ContractError("extract_comments: unsupported language tag " +
                      std::to_string(static_cast<int>(language)));
}

}  // namespace docmine
