#include <benchmark/benchmark.h>

#include <string>

#include "docmine/comment_extractor.hpp"

namespace {

std::string cpp_source(int functions) {
  std::string out = "/* header block */\n#include <string>\n";
  for (int i = 0; i < functions; ++i) {
    out += "// computes value " + std::to_string(i) + "\nint f" + std::to_string(i) +
           "() { const char* s = \"// not a comment\"; return 1; /* trailing */ }\n";
  }
  return out;
}

std::string python_source(int functions) {
  std::string out;
  for (int i = 0; i < functions; ++i) {
    out += "def f" + std::to_string(i) + "():\n    \"\"\"Docstring " + std::to_string(i) +
           ".\"\"\"\n    s = '# not a comment'  # inline\n    return s\n";
  }
  return out;
}

void BM_ExtractCpp(benchmark::State& state) {
  const std::string src = cpp_source(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(docmine::extract_comments(src, docmine::Language::Cpp));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_ExtractCpp)->Arg(100)->Arg(5000);

void BM_ExtractPython(benchmark::State& state) {
  const std::string src = python_source(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(docmine::extract_comments(src, docmine::Language::Python));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_ExtractPython)->Arg(100)->Arg(5000);

}  // namespace
