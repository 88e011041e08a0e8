#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "docmine/text_pipeline.hpp"
#include "docmine/topic_model.hpp"

namespace {

docmine::Corpus synthetic_corpus(int docs, int vocab, int length) {
  std::mt19937_64 rng(11);
  std::vector<docmine::TokenizedDocument> tokenized;
  for (int d = 0; d < docs; ++d) {
    docmine::TokenizedDocument doc{docmine::Source::SourceCodeComments, "bench", {}};
    for (int i = 0; i < length; ++i) doc.tokens.push_back("word" + std::to_string(rng() % vocab));
    tokenized.push_back(std::move(doc));
  }
  return docmine::build_corpus(tokenized);
}

void BM_GibbsTrain(benchmark::State& state) {
  const docmine::Corpus corpus = synthetic_corpus(200, 500, 60);
  docmine::LdaConfig cfg;
  cfg.iterations = 50;
  cfg.burn_in = 10;
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(docmine::train_lda(corpus, k, cfg));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * corpus.total_tokens() * cfg.iterations));
}
BENCHMARK(BM_GibbsTrain)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
