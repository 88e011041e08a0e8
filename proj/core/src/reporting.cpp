#include "docmine/reporting.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "docmine/errors.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace docmine {

namespace {

std::string_view to_string(RepoStatus status) {
  switch (status) {
    case RepoStatus::Analyzed: return "analyzed";
    case RepoStatus::Excluded: return "excluded";
    case RepoStatus::Failed: return "failed";
  }
  return "failed";
}

json type_map(const TypeShares& shares) {
  json j = json::object();
  for (DocType t : kAllDocTypes) j[std::string(to_string(t))] = shares[index_of(t)];
  return j;
}

json source_map(const SourceShares& shares) {
  json j = json::object();
  for (Source s : kAllSources) j[std::string(to_string(s))] = shares[index_of(s)];
  return j;
}

json score_map(const ScoreVector& scores) {
  json j = json::object();
  for (std::size_t i = 0; i < kLabeledDocTypes.size(); ++i) {
    j[std::string(to_string(kLabeledDocTypes[i]))] = scores[i];
  }
  return j;
}

json source_json(const SourceResult& s) {
  json coherence = json::array();
  for (auto [k, score] : s.coherence_by_k) coherence.push_back({{"k", k}, {"score", score}});
  json topics = json::array();
  for (const TopicRecord& t : s.topics) {
    json keywords = json::array();
    for (const Keyword& kw : t.keywords) keywords.push_back({{"token", kw.token}, {"weight", kw.weight}});
    topics.push_back({{"index", t.index},
                      {"label", to_string(t.label)},
                      {"mass", t.mass},
                      {"keywords", std::move(keywords)},
                      {"scores", score_map(t.scores)}});
  }
  return {{"source", to_string(s.source)},
          {"documents", s.documents},
          {"dropped_empty_documents", s.dropped_empty_documents},
          {"empty", s.distribution.empty},
          {"k", s.k},
          {"seed", s.seed},
          {"token_mass", s.distribution.token_mass},
          {"counts_consistent", s.counts_consistent},
          {"coherence_by_k", std::move(coherence)},
          {"topics", std::move(topics)},
          {"distribution", type_map(s.distribution.percentages)}};
}

json repo_json(const RepoResult& r) {
  json categories = json::object();
  for (std::size_t i = 0; i < r.file_categories.size(); ++i) {
    static constexpr const char* kNames[] = {"textual", "images", "design_diagrams", "source_code", "others"};
    categories[kNames[i]] = r.file_categories[i];
  }
  json sources = json::array();
  for (const SourceResult& s : r.sources) sources.push_back(source_json(s));
  return {{"repo_id", r.repo_id},
          {"language", to_string(r.language)},
          {"status", to_string(r.status)},
          {"reason", r.reason},
          {"flags", r.flags},
          {"file_categories", std::move(categories)},
          {"artifacts",
           {{"in_window", r.artifacts_in_window},
            {"dropped_out_of_window", r.artifacts_dropped},
            {"malformed", r.malformed_artifacts}}},
          {"lex_warnings", r.lex_warnings},
          {"sources", std::move(sources)}};
}

// Published shares of the original 950-repository crawl, shown for comparison only.
json reference_values() {
  return {
      {"note", "shares reported for the original 950-repository study; displayed for comparison, not asserted"},
      {"overall_type_share",
       {{"error_related", 25.9},
        {"project_related", 23.6},
        {"file_related", 16.04},
        {"license_related", 15.99},
        {"api_related", 5.63},
        {"others", 12.75}}},
      {"overall_source_share",
       {{"source_code_comments", 23.04},
        {"textual_docs", 22.58},
        {"commits", 18.5},
        {"pull_requests", 18.21},
        {"issues", 17.63}}},
      {"source_share_note",
       "18.21 and 17.63 are each attributed to issues in one published summary; 18.21 is assigned "
       "to pull requests here, matching the headline figure of the study"},
      {"optimal_topic_counts", {{"commits", 4}, {"issues", 5}, {"pull_requests", 4}}},
  };
}

json provenance_json(const Provenance& p) {
  json pinned = json::object();
  for (const auto& [source, k] : p.pinned_k) pinned[source] = k;
  return {{"anchor_date", p.anchor_date},
          {"span_years", p.span_years},
          {"provider", p.provider},
          {"lexicon_version", p.lexicon_version},
          {"stopwords", p.stopwords},
          {"global_seed", p.global_seed},
          {"k_mode", p.k_mode},
          {"pinned_k", std::move(pinned)},
          {"lda",
           {{"alpha", p.lda_alpha},
            {"beta", p.lda_beta},
            {"iterations", p.lda_iterations},
            {"burn_in", p.lda_burn_in},
            {"average_samples", p.lda_average_samples}}},
          {"docstrings", p.docstrings},
          {"stem", p.stem},
          {"min_df", p.min_df},
          {"similarity", p.similarity},
          {"tie_eps", p.tie_eps},
          {"topic_weighting", p.topic_weighting},
          {"average_weighting", p.average_weighting},
          {"hidden_files_included", p.hidden_files_included}};
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << content;
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

}  // namespace

std::string format_percent(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  // Avoid "-0.0000" for tiny negative rounding noise.
  if (std::string_view(buf) == "-0.0000") return "0.0000";
  return buf;
}

LanguageAverages aggregate_by_language(const std::vector<TypeDistribution>& dists,
                                       const std::map<std::string, Language>& repo_langs,
                                       AverageWeighting weighting) {
  LanguageAverages out;
  std::map<Language, std::array<double, 5>> weights;
  for (const TypeDistribution& d : dists) {
    auto lang = repo_langs.find(d.repo_id);
    if (lang == repo_langs.end()) throw ContractError("aggregate_by_language: no language for " + d.repo_id);
    auto& cells = out[lang->second];
    weights.try_emplace(lang->second);
    if (d.empty) continue;
    LanguageCell& cell = cells[index_of(d.source)];
    const double w = weighting == AverageWeighting::PerRepo ? 1.0 : static_cast<double>(d.token_mass);
    for (std::size_t t = 0; t < cell.percentages.size(); ++t) cell.percentages[t] += w * d.percentages[t];
    weights[lang->second][index_of(d.source)] += w;
    ++cell.repos;
  }
  for (auto& [lang, cells] : out) {
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const double w = weights[lang][s];
      if (w <= 0.0) continue;
      for (double& p : cells[s].percentages) p /= w;
    }
  }
  return out;
}

ContributionMatrix source_contribution(const std::vector<TypeDistribution>& dists) {
  std::array<SourceShares, 6> mass{};
  for (const TypeDistribution& d : dists) {
    if (d.empty) continue;
    for (DocType t : kAllDocTypes) {
      mass[index_of(t)][index_of(d.source)] += d.percent(t) * static_cast<double>(d.token_mass) / 100.0;
    }
  }
  ContributionMatrix m;
  for (std::size_t t = 0; t < mass.size(); ++t) {
    double total = 0.0;
    for (double v : mass[t]) total += v;
    if (total <= 0.0) {
      m.zero_mass[t] = true;
      continue;
    }
    for (std::size_t s = 0; s < mass[t].size(); ++s) m.values[t][s] = 100.0 * mass[t][s] / total;
  }
  return m;
}

std::vector<TypeDistribution> analyzed_distributions(const RunReport& report) {
  std::vector<TypeDistribution> dists;
  for (const RepoResult& repo : report.repos) {
    if (repo.status != RepoStatus::Analyzed) continue;
    for (const SourceResult& s : repo.sources) dists.push_back(s.distribution);
  }
  return dists;
}

void finalize_report(RunReport& report, AverageWeighting weighting) {
  std::map<std::string, Language> langs;
  for (const RepoResult& repo : report.repos) {
    if (repo.status == RepoStatus::Analyzed) langs[repo.repo_id] = repo.language;
  }
  const std::vector<TypeDistribution> dists = analyzed_distributions(report);
  report.per_language_avg = aggregate_by_language(dists, langs, weighting);
  report.contribution = source_contribution(dists);

  TypeShares type_mass{};
  SourceShares source_mass{};
  for (const TypeDistribution& d : dists) {
    if (d.empty) continue;
    const double m = static_cast<double>(d.token_mass);
    source_mass[index_of(d.source)] += m;
    for (DocType t : kAllDocTypes) type_mass[index_of(t)] += d.percent(t) * m / 100.0;
  }
  double total_types = 0.0;
  for (double v : type_mass) total_types += v;
  double total_sources = 0.0;
  for (double v : source_mass) total_sources += v;
  report.overall_type_share = {};
  report.overall_source_share = {};
  if (total_types > 0.0) {
    for (std::size_t i = 0; i < type_mass.size(); ++i) report.overall_type_share[i] = 100.0 * type_mass[i] / total_types;
  }
  if (total_sources > 0.0) {
    for (std::size_t i = 0; i < source_mass.size(); ++i) {
      report.overall_source_share[i] = 100.0 * source_mass[i] / total_sources;
    }
  }
}

std::string report_to_json(const RunReport& report) {
  json repos = json::array();
  json excluded = json::array();
  for (const RepoResult& r : report.repos) {
    repos.push_back(repo_json(r));
    if (r.status != RepoStatus::Analyzed) {
      excluded.push_back({{"repo_id", r.repo_id}, {"status", to_string(r.status)}, {"reason", r.reason}});
    }
  }
  json per_language = json::object();
  for (const auto& [lang, cells] : report.per_language_avg) {
    json by_source = json::object();
    for (Source s : kAllSources) {
      const LanguageCell& cell = cells[index_of(s)];
      by_source[std::string(to_string(s))] = {{"repos", cell.repos}, {"percentages", type_map(cell.percentages)}};
    }
    per_language[std::string(to_string(lang))] = std::move(by_source);
  }
  json contribution = json::object();
  json zero_rows = json::array();
  for (DocType t : kAllDocTypes) {
    contribution[std::string(to_string(t))] = source_map(report.contribution.values[index_of(t)]);
    if (report.contribution.zero_mass[index_of(t)]) zero_rows.push_back(to_string(t));
  }
  const json j = {{"schema_version", 1},
                  {"provenance", provenance_json(report.provenance)},
                  {"repositories", std::move(repos)},
                  {"excluded", std::move(excluded)},
                  {"per_language_average", std::move(per_language)},
                  {"overall_type_share", type_map(report.overall_type_share)},
                  {"overall_source_share", source_map(report.overall_source_share)},
                  {"source_contribution", std::move(contribution)},
                  {"source_contribution_zero_mass", std::move(zero_rows)},
                  {"reference_values", reference_values()}};
  return j.dump(2) + "\n";
}

std::string rq3_csv(const RunReport& report) {
  std::ostringstream out;
  out << "language,source,type,pct\n";
  for (const auto& [lang, cells] : report.per_language_avg) {
    for (Source s : kAllSources) {
      for (DocType t : kAllDocTypes) {
        out << to_string(lang) << ',' << to_string(s) << ',' << to_string(t) << ','
            << format_percent(cells[index_of(s)].percentages[index_of(t)]) << '\n';
      }
    }
  }
  return out.str();
}

std::string rq4_csv(const RunReport& report) {
  std::ostringstream out;
  out << "type,source,pct\n";
  for (DocType t : kAllDocTypes) {
    for (Source s : kAllSources) {
      out << to_string(t) << ',' << to_string(s) << ','
          << format_percent(report.contribution.values[index_of(t)][index_of(s)]) << '\n';
    }
  }
  return out.str();
}

std::string figure_csv(const RunReport& report, Source source) {
  std::ostringstream out;
  out << "language";
  for (DocType t : kAllDocTypes) out << ',' << to_string(t);
  out << '\n';
  for (const auto& [lang, cells] : report.per_language_avg) {
    out << to_string(lang);
    for (DocType t : kAllDocTypes) out << ',' << format_percent(cells[index_of(source)].percentages[index_of(t)]);
    out << '\n';
  }
  return out.str();
}

std::vector<fs::path> emit_reports(const RunReport& report, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir, ec.message());
  std::vector<fs::path> written;
  auto emit = [&](const std::string& name, const std::string& content) {
    const fs::path path = out_dir / name;
    write_file(path, content);
    written.push_back(path);
  };
  emit("report.json", report_to_json(report));
  emit("rq3.csv", rq3_csv(report));
  emit("rq4.csv", rq4_csv(report));
  for (Source s : kAllSources) emit("fig_" + std::string(to_string(s)) + ".csv", figure_csv(report, s));
  return written;
}

}  // namespace docmine
