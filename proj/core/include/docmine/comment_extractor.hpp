#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "docmine/types.hpp"

namespace docmine {

enum class CommentKind { Line, Block, DocString };

std::string_view to_string(CommentKind kind);

struct CommentSpan {
  std::string file;
  CommentKind kind = CommentKind::Line;
  std::string text;     // delimiters and block decorations stripped, trimmed
  int start_line = 1;   // 1-based line of the opening delimiter

  friend bool operator==(const CommentSpan&, const CommentSpan&) = default;
};

struct ExtractOptions {
  /// Treat leading triple-quoted strings of Python modules, classes and functions as
  /// comments.
  bool python_docstrings = true;
};

struct ExtractResult {
  std::vector<CommentSpan> spans;
  std::vector<std::string> warnings;  // e.g. unterminated block comment
};

/// Lexes `source_text` and returns its comments in document order. String, char,
/// raw and verbatim literals are skipped so comment markers inside them never count.
/// Throws ContractError for a language value outside the four supported ones.
ExtractResult extract_comments(std::string_view source_text, Language language,
                               const ExtractOptions& options = {},
                               std::string_view file = {});

}  // namespace docmine
