#include "docmine/topic_model.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <thread>

#include "docmine/errors.hpp"
#include "docmine/seeding.hpp"
#include "json.hpp"

using nlohmann::json;

namespace docmine {

namespace {

std::vector<std::uint32_t> expand_tokens(const SparseDoc& doc) {
  std::vector<std::uint32_t> tokens;
  for (const TermCount& tc : doc) tokens.insert(tokens.end(), tc.count, tc.term);
  return tokens;
}

// Term ids of a topic ordered by count (desc), then token text (asc).
std::vector<std::uint32_t> ranked_terms(const LdaModel& model, int topic, std::size_t n) {
  const std::size_t v = model.vocab_size();
  n = std::min(n, v);
  std::vector<std::uint32_t> ids(v);
  std::iota(ids.begin(), ids.end(), 0u);
  const auto& terms = *model.vocabulary;
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    const auto ca = model.topic_word(topic, a);
    const auto cb = model.topic_word(topic, b);
    if (ca != cb) return ca > cb;
    return terms[a] < terms[b];
  };
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n), ids.end(), better);
  ids.resize(n);
  return ids;
}

void recount(LdaModel& model, const std::vector<std::vector<std::uint32_t>>& tokens) {
  const std::size_t k = static_cast<std::size_t>(model.k);
  std::fill(model.topic_word_counts.begin(), model.topic_word_counts.end(), 0u);
  std::fill(model.doc_topic_counts.begin(), model.doc_topic_counts.end(), 0u);
  std::fill(model.topic_totals.begin(), model.topic_totals.end(), 0u);
  for (std::size_t d = 0; d < tokens.size(); ++d) {
    for (std::size_t i = 0; i < tokens[d].size(); ++i) {
      const std::size_t z = model.assignments[d][i];
      ++model.topic_word_counts[z * model.vocab_size() + tokens[d][i]];
      ++model.doc_topic_counts[d * k + z];
      ++model.topic_totals[z];
    }
  }
}

}  // namespace

void LdaConfig::validate() const {
  if (alpha && !(*alpha > 0.0)) throw ContractError("alpha must be > 0");
  if (!(beta > 0.0)) throw ContractError("beta must be > 0");
  if (iterations < 1) throw ContractError("iterations must be >= 1");
  if (burn_in < 0 || burn_in >= iterations) throw ContractError("burn_in must be in [0, iterations)");
}

std::uint64_t LdaModel::total_tokens() const {
  return std::accumulate(topic_totals.begin(), topic_totals.end(), std::uint64_t{0});
}

LdaModel train_lda(const Corpus& corpus, int k, const LdaConfig& config) {
  config.validate();
  if (corpus.docs.empty() || corpus.vocabulary.size() == 0) throw EmptyCorpusError();
  if (k < kMinTopics || k > kMaxTopics) {
    throw ContractError("topic count " + std::to_string(k) + " outside [2, 100]");
  }
  if (static_cast<std::size_t>(k) > corpus.docs.size()) {
    spdlog::debug("k={} exceeds the {} documents; the model will be degenerate", k, corpus.docs.size());
  }

  LdaModel model;
  model.k = k;
  model.num_docs = corpus.docs.size();
  model.config = config;
  model.vocabulary = std::make_shared<const std::vector<std::string>>(corpus.vocabulary.terms());
  const std::size_t V = model.vocab_size();
  const std::size_t K = static_cast<std::size_t>(k);
  const std::size_t D = corpus.docs.size();
  model.topic_word_counts.assign(K * V, 0);
  model.doc_topic_counts.assign(D * K, 0);
  model.topic_totals.assign(K, 0);

  std::vector<std::vector<std::uint32_t>> tokens(D);
  for (std::size_t d = 0; d < D; ++d) tokens[d] = expand_tokens(corpus.docs[d]);

  std::mt19937_64 rng(config.seed);
  model.assignments.resize(D);
  for (std::size_t d = 0; d < D; ++d) {
    model.assignments[d].resize(tokens[d].size());
    for (auto& z : model.assignments[d]) z = static_cast<std::uint16_t>(uniform_index(rng, K));
  }
  recount(model, tokens);

  const double alpha = config.alpha_for(k);
  const double beta = config.beta;
  const double v_beta = static_cast<double>(V) * beta;
  std::vector<double> cumulative(K);

  // Post-burn-in topic tallies per token, only when averaging.
  std::vector<std::vector<std::uint32_t>> tally;
  if (config.average_samples) {
    tally.resize(D);
    for (std::size_t d = 0; d < D; ++d) tally[d].assign(tokens[d].size() * K, 0);
  }

  auto* tw = model.topic_word_counts.data();
  auto* dt = model.doc_topic_counts.data();
  auto* tt = model.topic_totals.data();
  for (int iter = 0; iter < config.iterations; ++iter) {
    for (std::size_t d = 0; d < D; ++d) {
      auto& z_d = model.assignments[d];
      auto* dt_d = dt + d * K;
      for (std::size_t i = 0; i < tokens[d].size(); ++i) {
        const std::uint32_t w = tokens[d][i];
        std::size_t z = z_d[i];
        --tw[z * V + w];
        --dt_d[z];
        --tt[z];

        double total = 0.0;
        for (std::size_t t = 0; t < K; ++t) {
          const double p = (static_cast<double>(dt_d[t]) + alpha) *
                           (static_cast<double>(tw[t * V + w]) + beta) /
                           (static_cast<double>(tt[t]) + v_beta);
          total += p;
          cumulative[t] = total;
        }
        const double u = unit_double(rng) * total;
        z = K - 1;
        for (std::size_t t = 0; t < K; ++t) {
          if (u < cumulative[t]) {
            z = t;
            break;
          }
        }

        z_d[i] = static_cast<std::uint16_t>(z);
        ++tw[z * V + w];
        ++dt_d[z];
        ++tt[z];
      }
    }
    if (config.average_samples && iter >= config.burn_in) {
      for (std::size_t d = 0; d < D; ++d) {
        for (std::size_t i = 0; i < tokens[d].size(); ++i) ++tally[d][i * K + model.assignments[d][i]];
      }
    }
  }

  if (config.average_samples) {
    for (std::size_t d = 0; d < D; ++d) {
      for (std::size_t i = 0; i < tokens[d].size(); ++i) {
        const auto* row = tally[d].data() + i * K;
        model.assignments[d][i] = static_cast<std::uint16_t>(std::max_element(row, row + K) - row);
      }
    }
    recount(model, tokens);
  }
  return model;
}

bool counts_consistent(const LdaModel& model, const Corpus& corpus) {
  const std::size_t K = static_cast<std::size_t>(model.k);
  const std::size_t V = model.vocab_size();
  if (model.num_docs != corpus.docs.size() || V != corpus.vocabulary.size()) return false;
  if (model.doc_topic_counts.size() != model.num_docs * K || model.topic_word_counts.size() != K * V) {
    return false;
  }
  for (std::size_t d = 0; d < model.num_docs; ++d) {
    std::uint64_t row = 0;
    for (std::size_t t = 0; t < K; ++t) row += model.doc_topic(d, static_cast<int>(t));
    if (row != corpus.doc_length(d)) return false;
  }
  std::vector<std::uint64_t> per_term(V, 0);
  for (const SparseDoc& doc : corpus.docs) {
    for (const TermCount& tc : doc) per_term[tc.term] += tc.count;
  }
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < K; ++t) {
    std::uint64_t row = 0;
    for (std::size_t w = 0; w < V; ++w) row += model.topic_word(static_cast<int>(t), static_cast<std::uint32_t>(w));
    if (row != model.topic_totals[t]) return false;
    total += row;
  }
  for (std::size_t w = 0; w < V; ++w) {
    std::uint64_t col = 0;
    for (std::size_t t = 0; t < K; ++t) col += model.topic_word(static_cast<int>(t), static_cast<std::uint32_t>(w));
    if (col != per_term[w]) return false;
  }
  return total == corpus.total_tokens();
}

std::vector<TopicSummary> top_keywords(const LdaModel& model, int n) {
  if (n < 1) throw ContractError("top_keywords: n must be >= 1");
  const std::size_t V = model.vocab_size();
  if (static_cast<std::size_t>(n) > V) {
    spdlog::warn("top_keywords: n={} exceeds vocabulary size {}, truncating", n, V);
  }
  const double v_beta = static_cast<double>(V) * model.config.beta;
  std::vector<TopicSummary> out;
  for (int t = 0; t < model.k; ++t) {
    TopicSummary summary;
    summary.topic_index = t;
    const double denom = static_cast<double>(model.topic_totals[static_cast<std::size_t>(t)]) + v_beta;
    for (std::uint32_t id : ranked_terms(model, t, static_cast<std::size_t>(n))) {
      const double weight = (static_cast<double>(model.topic_word(t, id)) + model.config.beta) / denom;
      summary.keywords.push_back({(*model.vocabulary)[id], weight});
    }
    out.push_back(std::move(summary));
  }
  return out;
}

CooccurrenceIndex::CooccurrenceIndex(const Corpus& corpus) : postings_(corpus.vocabulary.size()) {
  for (std::size_t d = 0; d < corpus.docs.size(); ++d) {
    for (const TermCount& tc : corpus.docs[d]) postings_[tc.term].push_back(static_cast<std::uint32_t>(d));
  }
}

std::uint32_t CooccurrenceIndex::doc_freq(std::uint32_t term) const {
  return static_cast<std::uint32_t>(postings_.at(term).size());
}

std::uint32_t CooccurrenceIndex::co_doc_freq(std::uint32_t a, std::uint32_t b) const {
  const auto& pa = postings_.at(a);
  const auto& pb = postings_.at(b);
  std::uint32_t n = 0;
  auto ia = pa.begin();
  auto ib = pb.begin();
  while (ia != pa.end() && ib != pb.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++n;
      ++ia;
      ++ib;
    }
  }
  return n;
}

double coherence(const LdaModel& model, const CooccurrenceIndex& index, int top_n) {
  if (top_n < 2) throw ContractError("coherence: top_n must be >= 2");
  double sum = 0.0;
  for (int t = 0; t < model.k; ++t) {
    const auto top = ranked_terms(model, t, static_cast<std::size_t>(top_n));
    double score = 0.0;
    for (std::size_t i = 0; i < top.size(); ++i) {
      for (std::size_t j = i + 1; j < top.size(); ++j) {
        const double co = index.co_doc_freq(top[i], top[j]);
        const double df = index.doc_freq(top[j]);
        score += std::log((co + 1.0) / df);
      }
    }
    sum += score;
  }
  return sum / model.k;
}

double coherence(const LdaModel& model, const Corpus& corpus, int top_n) {
  if (model.vocab_size() != corpus.vocabulary.size()) {
    throw ContractError("coherence: model and corpus vocabularies differ");
  }
  return coherence(model, CooccurrenceIndex(corpus), top_n);
}

SweepResult select_topic_count(const Corpus& corpus, const LdaConfig& config, const SweepOptions& options) {
  if (options.k_min < kMinTopics || options.k_max > kMaxTopics || options.k_min > options.k_max) {
    throw ContractError("select_topic_count: invalid k range");
  }
  if (corpus.docs.empty()) throw EmptyCorpusError();
  const CooccurrenceIndex index(corpus);
  const int count = options.k_max - options.k_min + 1;
  std::vector<std::optional<LdaModel>> models(static_cast<std::size_t>(count));
  std::vector<double> scores(static_cast<std::size_t>(count), 0.0);

  auto fit = [&](int slot) {
    const int k = options.k_min + slot;
    models[static_cast<std::size_t>(slot)] = train_lda(corpus, k, config);
    scores[static_cast<std::size_t>(slot)] =
        coherence(*models[static_cast<std::size_t>(slot)], index, options.top_n);
  };

  const int jobs = std::clamp(options.jobs, 1, count);
  if (jobs == 1) {
    for (int s = 0; s < count; ++s) fit(s);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> workers;
      for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
          for (int s = next++; s < count; s = next++) {
            try {
              fit(s);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  SweepResult result;
  int best = 0;
  for (int s = 0; s < count; ++s) {
    result.scores.emplace_back(options.k_min + s, scores[static_cast<std::size_t>(s)]);
    if (scores[static_cast<std::size_t>(s)] > scores[static_cast<std::size_t>(best)]) best = s;
  }
  result.k_star = options.k_min + best;
  result.best_model = std::move(*models[static_cast<std::size_t>(best)]);
  return result;
}

std::string vocabulary_hash(const std::vector<std::string>& terms) {
  std::uint64_t h = fnv1a64("");
  for (const std::string& t : terms) {
    h = fnv1a64(t, h);
    h = fnv1a64("\n", h);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string model_to_json(const LdaModel& model) {
  const std::size_t K = static_cast<std::size_t>(model.k);
  const std::size_t V = model.vocab_size();
  json tw = json::array();
  for (std::size_t t = 0; t < K; ++t) {
    tw.push_back(std::vector<std::uint32_t>(model.topic_word_counts.begin() + static_cast<std::ptrdiff_t>(t * V),
                                            model.topic_word_counts.begin() + static_cast<std::ptrdiff_t>((t + 1) * V)));
  }
  json dt = json::array();
  for (std::size_t d = 0; d < model.num_docs; ++d) {
    dt.push_back(std::vector<std::uint32_t>(model.doc_topic_counts.begin() + static_cast<std::ptrdiff_t>(d * K),
                                            model.doc_topic_counts.begin() + static_cast<std::ptrdiff_t>((d + 1) * K)));
  }
  json config = {{"beta", model.config.beta},
                 {"iterations", model.config.iterations},
                 {"burn_in", model.config.burn_in},
                 {"seed", model.config.seed},
                 {"average_samples", model.config.average_samples}};
  config["alpha"] = model.config.alpha ? json(*model.config.alpha) : json(nullptr);
  json j = {{"k", model.k},
            {"num_docs", model.num_docs},
            {"vocab_size", V},
            {"vocab_hash", model.vocabulary ? vocabulary_hash(*model.vocabulary) : std::string()},
            {"config", std::move(config)},
            {"topic_word_counts", std::move(tw)},
            {"doc_topic_counts", std::move(dt)}};
  return j.dump();
}

LdaModel model_from_json(std::string_view text, std::shared_ptr<const std::vector<std::string>> vocabulary) {
  if (!vocabulary) throw ContractError("model_from_json: vocabulary required");
  try {
    const json j = json::parse(text);
    LdaModel model;
    model.k = j.at("k").get<int>();
    model.num_docs = j.at("num_docs").get<std::size_t>();
    if (j.at("vocab_size").get<std::size_t>() != vocabulary->size() ||
        j.at("vocab_hash").get<std::string>() != vocabulary_hash(*vocabulary)) {
      throw ParseError("model vocabulary does not match the supplied vocabulary");
    }
    model.vocabulary = std::move(vocabulary);
    const json& c = j.at("config");
    if (!c.at("alpha").is_null()) model.config.alpha = c.at("alpha").get<double>();
    model.config.beta = c.at("beta").get<double>();
    model.config.iterations = c.at("iterations").get<int>();
    model.config.burn_in = c.at("burn_in").get<int>();
    model.config.seed = c.at("seed").get<std::uint64_t>();
    model.config.average_samples = c.at("average_samples").get<bool>();
    const std::size_t K = static_cast<std::size_t>(model.k);
    for (const json& row : j.at("topic_word_counts")) {
      if (row.size() != model.vocab_size()) throw ParseError("topic_word_counts row size mismatch");
      for (const json& v : row) model.topic_word_counts.push_back(v.get<std::uint32_t>());
    }
    for (const json& row : j.at("doc_topic_counts")) {
      if (row.size() != K) throw ParseError("doc_topic_counts row size mismatch");
      for (const json& v : row) model.doc_topic_counts.push_back(v.get<std::uint32_t>());
    }
    if (model.topic_word_counts.size() != K * model.vocab_size() ||
        model.doc_topic_counts.size() != K * model.num_docs) {
      throw ParseError("model count matrices have the wrong shape");
    }
    model.topic_totals.assign(K, 0);
    for (std::size_t t = 0; t < K; ++t) {
      for (std::size_t w = 0; w < model.vocab_size(); ++w) {
        model.topic_totals[t] += model.topic_word_counts[t * model.vocab_size() + w];
      }
    }
    return model;
  } catch (const json::exception& e) {
    throw ParseError(std::string("model json: ") + e.what());
  }
}

}  // namespace docmine
