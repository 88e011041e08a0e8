#include <benchmark/benchmark.h>

#include <string>

#include "docmine/text_pipeline.hpp"

namespace {

std::string sample_text(std::size_t paragraphs) {
  std::string text;
  for (std::size_t i = 0; i < paragraphs; ++i) {
    text += "Parses the HttpRequestHeader and returns parseResult_" + std::to_string(i) +
            "; see https://example.org/docs for the request_timeout semantics.\n";
  }
  return text;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string text = sample_text(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(docmine::tokenize(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Tokenize)->Arg(10)->Arg(1000);

void BM_TokenizeStemmed(benchmark::State& state) {
  const std::string text = sample_text(1000);
  docmine::TokenizerOptions options;
  options.stem = true;
  for (auto _ : state) benchmark::DoNotOptimize(docmine::tokenize(text, options));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_TokenizeStemmed);

}  // namespace
