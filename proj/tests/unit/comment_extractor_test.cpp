#include <gtest/gtest.h>

#include "comment_key.hpp"
#include "docmine/comment_extractor.hpp"
#include "docmine/errors.hpp"

using namespace docmine;
using namespace docmine::testing;

namespace {

std::vector<std::string> texts(std::string_view src, Language lang, ExtractOptions opts = {}) {
  std::vector<std::string> out;
  for (const CommentSpan& s : extract_comments(src, lang, opts).spans) out.push_back(s.text);
  return out;
}

}  // namespace

TEST(CommentExtractor, SingleLineComment) {
  const auto r = extract_comments("int x; // counter", Language::Cpp, {}, "a.cpp");
  ASSERT_EQ(r.spans.size(), 1u);
  EXPECT_EQ(r.spans[0].kind, CommentKind::Line);
  EXPECT_EQ(r.spans[0].text, "counter");
  EXPECT_EQ(r.spans[0].start_line, 1);
  EXPECT_EQ(r.spans[0].file, "a.cpp");
}

TEST(CommentExtractor, MarkerInsidePythonString) {
  EXPECT_TRUE(extract_comments(R"(s = "// not a comment")", Language::Python).spans.empty());
  EXPECT_TRUE(extract_comments(R"(s = "# not a comment")", Language::Python).spans.empty());
}

TEST(CommentExtractor, JavaTwoBlocksThreeLinesOneTrap) {
  const std::string src =
      "/* first */\n"
      "class A {\n"
      "  String s = \"// trap\"; // one\n"
      "  /**\n"
      "   * second\n"
      "   */\n"
      "  // two\n"
      "  int x; // three\n"
      "}\n";
  const auto r = extract_comments(src, Language::Java);
  ASSERT_EQ(r.spans.size(), 5u);
  const std::vector<int> lines = {1, 3, 4, 7, 8};
  for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_EQ(r.spans[i].start_line, lines[i]) << i;
  EXPECT_EQ(r.spans[2].text, "second");
}

TEST(CommentExtractor, UnterminatedBlockWarnsAndRunsToEnd) {
  const auto r = extract_comments("int a; /* open\nstill open", Language::Cpp);
  ASSERT_EQ(r.spans.size(), 1u);
  EXPECT_EQ(r.spans[0].text, "open\nstill open");
  ASSERT_EQ(r.warnings.size(), 1u);
}

TEST(CommentExtractor, UnterminatedStringDoesNotSwallowFile) {
  EXPECT_EQ(texts("char* s = \"abc\n// real\n", Language::Cpp), std::vector<std::string>{"real"});
}

TEST(CommentExtractor, CppRawStringsAndSeparators) {
  EXPECT_TRUE(texts(R"cc(auto s = R"x(/* )" // */)x";)cc", Language::Cpp).empty());
  EXPECT_EQ(texts("int n = 1'0'0; // ok", Language::Cpp), std::vector<std::string>{"ok"});
  // R not preceded by an identifier boundary is just an identifier.
  EXPECT_EQ(texts("int FOOR = 1; // c", Language::Cpp), std::vector<std::string>{"c"});
}

TEST(CommentExtractor, CSharpLiterals) {
  EXPECT_TRUE(texts(R"(var p = @"c:\// x"" /* y";)", Language::CSharp).empty());
  EXPECT_TRUE(texts(R"(var p = $"{(b ? "//" : "/*")}";)", Language::CSharp).empty());
  EXPECT_EQ(texts("var p = $\"{{// braces}}\"; // real", Language::CSharp), std::vector<std::string>{"real"});
}

TEST(CommentExtractor, JavaCharAndTextBlock) {
  EXPECT_EQ(texts("char c = '\"'; // q", Language::Java), std::vector<std::string>{"q"});
  EXPECT_TRUE(texts("String t = \"\"\"\n// no\n\"\"\";", Language::Java).empty());
}

TEST(CommentExtractor, PythonDocstringsToggle) {
  const std::string src = "def f():\n    \"\"\"Doc.\"\"\"\n    return 1  # tail\n";
  const auto on = extract_comments(src, Language::Python);
  ASSERT_EQ(on.spans.size(), 2u);
  EXPECT_EQ(on.spans[0].kind, CommentKind::DocString);
  EXPECT_EQ(on.spans[0].text, "Doc.");
  EXPECT_EQ(texts(src, Language::Python, ExtractOptions{false}), std::vector<std::string>{"tail"});
}

TEST(CommentExtractor, PythonNonDocstringTripleQuotes) {
  EXPECT_TRUE(texts("x = 1\n\"\"\"not doc\"\"\"\n", Language::Python).empty());
  EXPECT_TRUE(texts("def f():\n    \"\"\"a\"\"\" + b\n", Language::Python).empty());
  EXPECT_TRUE(texts("def f():\n    b\"\"\"bytes\"\"\"\n", Language::Python).empty());
  EXPECT_TRUE(texts("def f():\n    x = 1\n    \"\"\"late\"\"\"\n", Language::Python).empty());
}

TEST(CommentExtractor, PythonShebangSkipped) {
  EXPECT_EQ(texts("#!/usr/bin/env python\n# real\n", Language::Python), std::vector<std::string>{"real"});
}

TEST(CommentExtractor, InvalidLanguageIsContractError) {
  EXPECT_THROW(extract_comments("", static_cast<Language>(42)), ContractError);
}

TEST(CommentExtractor, EmptyInput) {
  for (Language l : kAllLanguages) EXPECT_TRUE(extract_comments("", l).spans.empty());
}

class CommentFixtureTest : public ::testing::TestWithParam<CommentFixture> {};

TEST_P(CommentFixtureTest, MatchesHandLabeledKey) {
  const auto dir = fixture_dir() / "comments";
  const CommentFixture fx = GetParam();
  const auto expected = load_comment_key(dir / (std::string(fx.file) + ".key"));
  const auto result = extract_comments(read_text(dir / fx.file), fx.language, {}, fx.file);
  EXPECT_EQ(as_keyed(result), expected);
  EXPECT_GE(expected.size(), 20u);
}

INSTANTIATE_TEST_SUITE_P(Languages, CommentFixtureTest, ::testing::ValuesIn(kCommentFixtures),
                         [](const auto& info) { return std::string(to_string(info.param.language)); });
