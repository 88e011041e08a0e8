#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "docmine/errors.hpp"
#include "docmine/reporting.hpp"
#include "json.hpp"
#include "test_support.hpp"

using namespace docmine;
using nlohmann::json;

namespace {

TypeDistribution dist(const std::string& repo, Source source, std::uint64_t mass,
                      std::map<DocType, double> pct) {
  TypeDistribution d;
  d.repo_id = repo;
  d.source = source;
  d.token_mass = mass;
  d.empty = pct.empty();
  for (const auto& [t, p] : pct) d.percentages[index_of(t)] = p;
  return d;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

RunReport one_repo_report(Language lang, const std::string& id) {
  RepoResult repo;
  repo.repo_id = id;
  repo.language = lang;
  for (Source s : kAllSources) {
    SourceResult sr;
    sr.source = s;
    sr.distribution = dist(id, s, 10 + index_of(s), {{DocType::ErrorRelated, 100.0 / 3}, {DocType::ApiRelated, 200.0 / 3}});
    repo.sources.push_back(sr);
  }
  RunReport r;
  r.repos.push_back(repo);
  return r;
}

}  // namespace

TEST(Aggregate, MeanOfTwoRepos) {
  const auto avg = aggregate_by_language(
      {dist("a", Source::Issues, 10, {{DocType::ErrorRelated, 20}, {DocType::ApiRelated, 80}}),
       dist("b", Source::Issues, 10, {{DocType::ErrorRelated, 40}, {DocType::ApiRelated, 60}})},
      {{"a", Language::Cpp}, {"b", Language::Cpp}});
  const LanguageCell& cell = avg.at(Language::Cpp)[index_of(Source::Issues)];
  EXPECT_DOUBLE_EQ(cell.percentages[index_of(DocType::ErrorRelated)], 30.0);
  EXPECT_EQ(cell.repos, 2u);
}

TEST(Aggregate, SingleRepoIsIdentity) {
  const auto d = dist("a", Source::Commits, 7, {{DocType::FileRelated, 12.5}, {DocType::Others, 87.5}});
  const auto avg = aggregate_by_language({d}, {{"a", Language::Java}});
  EXPECT_EQ(avg.at(Language::Java)[index_of(Source::Commits)].percentages, d.percentages);
}

TEST(Aggregate, SixRepoFixtureHandComputed) {
  // cpp issues: (20,80,0), (40,60,0), (60,0,40) over (error, api, file)
  //   -> error 40, api 140/3, file 40/3
  // java issues: others 100; license 50 + project 50; one empty source (skipped)
  //   -> others 50, license 25, project 25 over 2 repos
  // java commits: error 100 from a single repo
  const std::vector<TypeDistribution> dists = {
      dist("r1", Source::Issues, 100, {{DocType::ErrorRelated, 20}, {DocType::ApiRelated, 80}}),
      dist("r2", Source::Issues, 50, {{DocType::ErrorRelated, 40}, {DocType::ApiRelated, 60}}),
      dist("r3", Source::Issues, 10, {{DocType::ErrorRelated, 60}, {DocType::FileRelated, 40}}),
      dist("r4", Source::Issues, 30, {{DocType::Others, 100}}),
      dist("r5", Source::Issues, 20, {{DocType::LicenseRelated, 50}, {DocType::ProjectRelated, 50}}),
      dist("r6", Source::Issues, 0, {}),
      dist("r4", Source::Commits, 50, {{DocType::ErrorRelated, 100}}),
  };
  const std::map<std::string, Language> langs = {{"r1", Language::Cpp},  {"r2", Language::Cpp},
                                                 {"r3", Language::Cpp},  {"r4", Language::Java},
                                                 {"r5", Language::Java}, {"r6", Language::Java}};
  const auto avg = aggregate_by_language(dists, langs);
  const auto& cpp = avg.at(Language::Cpp)[index_of(Source::Issues)].percentages;
  EXPECT_NEAR(cpp[index_of(DocType::ErrorRelated)], 40.0, 1e-9);
  EXPECT_NEAR(cpp[index_of(DocType::ApiRelated)], 140.0 / 3, 1e-9);
  EXPECT_NEAR(cpp[index_of(DocType::FileRelated)], 40.0 / 3, 1e-9);
  const auto& java = avg.at(Language::Java)[index_of(Source::Issues)];
  EXPECT_EQ(java.repos, 2u);
  EXPECT_NEAR(java.percentages[index_of(DocType::Others)], 50.0, 1e-9);
  EXPECT_NEAR(java.percentages[index_of(DocType::LicenseRelated)], 25.0, 1e-9);
  EXPECT_NEAR(java.percentages[index_of(DocType::ProjectRelated)], 25.0, 1e-9);
  EXPECT_NEAR(avg.at(Language::Java)[index_of(Source::Commits)].percentages[index_of(DocType::ErrorRelated)], 100.0, 1e-9);
  EXPECT_EQ(avg.at(Language::Cpp)[index_of(Source::Commits)].repos, 0u);

  // Mass weighting, cpp issues error: (20*100 + 40*50 + 60*10) / 160 = 4600 / 160.
  const auto by_mass = aggregate_by_language(dists, langs, AverageWeighting::ByMass);
  EXPECT_NEAR(by_mass.at(Language::Cpp)[index_of(Source::Issues)].percentages[index_of(DocType::ErrorRelated)],
              4600.0 / 160, 1e-9);
}

TEST(Aggregate, UnknownRepoIsContractError) {
  EXPECT_THROW(aggregate_by_language({dist("x", Source::Issues, 1, {{DocType::Others, 100}})}, {}), ContractError);
}

TEST(Contribution, TwoSources) {
  const auto m = source_contribution({dist("a", Source::Issues, 30, {{DocType::ErrorRelated, 100}}),
                                      dist("a", Source::Commits, 70, {{DocType::ErrorRelated, 100}})});
  const auto& row = m.values[index_of(DocType::ErrorRelated)];
  EXPECT_NEAR(row[index_of(Source::Issues)], 30.0, 1e-12);
  EXPECT_NEAR(row[index_of(Source::Commits)], 70.0, 1e-12);
  EXPECT_TRUE(m.zero_mass[index_of(DocType::ApiRelated)]);
}

TEST(Contribution, SingleSourceTakesAll) {
  const auto m = source_contribution({dist("a", Source::PullRequests, 5, {{DocType::FileRelated, 100}})});
  EXPECT_DOUBLE_EQ(m.values[index_of(DocType::FileRelated)][index_of(Source::PullRequests)], 100.0);
}

TEST(Contribution, ThreeSourceFixtureHandComputed) {
  // Error mass: issues 100*20% = 20, commits 50*100% = 50, comments 30*10% = 3 -> total 73.
  // File mass: issues 100*80% = 80, comments 30*90% = 27 -> total 107.
  const auto m = source_contribution({
      dist("a", Source::Issues, 100, {{DocType::ErrorRelated, 20}, {DocType::FileRelated, 80}}),
      dist("b", Source::Commits, 50, {{DocType::ErrorRelated, 100}}),
      dist("a", Source::SourceCodeComments, 30, {{DocType::ErrorRelated, 10}, {DocType::FileRelated, 90}}),
  });
  const auto& err = m.values[index_of(DocType::ErrorRelated)];
  EXPECT_NEAR(err[index_of(Source::Issues)], 2000.0 / 73, 1e-9);
  EXPECT_NEAR(err[index_of(Source::Commits)], 5000.0 / 73, 1e-9);
  EXPECT_NEAR(err[index_of(Source::SourceCodeComments)], 300.0 / 73, 1e-9);
  const auto& file = m.values[index_of(DocType::FileRelated)];
  EXPECT_NEAR(file[index_of(Source::Issues)], 8000.0 / 107, 1e-9);
  EXPECT_NEAR(file[index_of(Source::SourceCodeComments)], 2700.0 / 107, 1e-9);
}

TEST(Contribution, RowsSumToHundredOnRandomInputs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<TypeDistribution> dists;
    for (int i = 0; i < 8; ++i) {
      TypeDistribution d;
      d.repo_id = "r" + std::to_string(i % 3);
      d.source = kAllSources[rng() % 5];
      d.token_mass = rng() % 100;
      double total = 0.0;
      for (double& p : d.percentages) total += (p = static_cast<double>(rng() % 10));
      if (total == 0.0 || d.token_mass == 0) continue;
      for (double& p : d.percentages) p = 100.0 * p / total;
      d.empty = false;
      dists.push_back(d);
    }
    const auto m = source_contribution(dists);
    for (std::size_t t = 0; t < 6; ++t) {
      double sum = 0.0;
      for (double v : m.values[t]) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 100.0 + 1e-9);
        sum += v;
      }
      if (!m.zero_mass[t]) EXPECT_NEAR(sum, 100.0, 1e-6);
    }
  }
}

TEST(Csv, FormattingAndRowCounts) {
  EXPECT_EQ(format_percent(12.345649), "12.3456");
  EXPECT_EQ(format_percent(0.0), "0.0000");
  EXPECT_EQ(format_percent(100.0), "100.0000");

  RunReport r;
  for (Language l : kAllLanguages) {
    RunReport one = one_repo_report(l, "repo-" + std::string(to_string(l)));
    r.repos.push_back(one.repos.front());
  }
  finalize_report(r);
  const auto rq3 = parse_csv(rq3_csv(r));
  EXPECT_EQ(rq3.size(), 1u + 4 * 5 * 6);
  EXPECT_EQ(rq3[0], (std::vector<std::string>{"language", "source", "type", "pct"}));
  const auto rq4 = parse_csv(rq4_csv(r));
  EXPECT_EQ(rq4.size(), 1u + 6 * 5);
  const auto fig = parse_csv(figure_csv(r, Source::Issues));
  EXPECT_EQ(fig.size(), 1u + 4);
  EXPECT_EQ(fig[0].size(), 7u);
}

TEST(Reports, OneRepoRoundTrip) {
  RunReport r = one_repo_report(Language::Python, "o/p");
  r.provenance.provider = "dump";
  r.provenance.anchor_date = "2021-01-01";
  finalize_report(r);
  docmine::testing::TempDir dir;
  const auto files = emit_reports(r, dir.path());
  ASSERT_EQ(files.size(), 8u);

  const json j = json::parse(docmine::testing::read_text(dir / "report.json"));
  for (DocType t : kAllDocTypes) {
    EXPECT_EQ(j["overall_type_share"][std::string(to_string(t))].get<double>(), r.overall_type_share[index_of(t)]);
  }
  for (Source s : kAllSources) {
    EXPECT_EQ(j["overall_source_share"][std::string(to_string(s))].get<double>(),
              r.overall_source_share[index_of(s)]);
  }
  EXPECT_EQ(j["provenance"]["provider"], "dump");
  EXPECT_EQ(j["repositories"][0]["repo_id"], "o/p");
  EXPECT_TRUE(j.contains("reference_values"));

  for (const auto& row : parse_csv(docmine::testing::read_text(dir / "rq3.csv"))) {
    if (row[0] == "language") continue;
    const double v = std::stod(row[3]);
    const Source s = *parse_source(row[1]);
    const DocType t = *parse_doc_type(row[2]);
    EXPECT_NEAR(v, r.per_language_avg.at(*parse_language(row[0]))[index_of(s)].percentages[index_of(t)], 5e-5);
  }
  for (const auto& row : parse_csv(docmine::testing::read_text(dir / "rq4.csv"))) {
    if (row[0] == "type") continue;
    EXPECT_NEAR(std::stod(row[2]),
                r.contribution.values[index_of(*parse_doc_type(row[0]))][index_of(*parse_source(row[1]))], 5e-5);
  }
}

TEST(Reports, OverallSharesAreMassWeighted) {
  RunReport r = one_repo_report(Language::Java, "a");
  finalize_report(r);
  double total = 0.0;
  for (double v : r.overall_source_share) total += v;
  EXPECT_NEAR(total, 100.0, 1e-9);
  // Masses 10..14, total 60.
  EXPECT_NEAR(r.overall_source_share[index_of(Source::PullRequests)], 100.0 * 14 / 60, 1e-9);
  EXPECT_NEAR(r.overall_type_share[index_of(DocType::ErrorRelated)], 100.0 / 3, 1e-9);
}

TEST(Reports, UnwritableDirectoryIsIoError) {
  docmine::testing::TempDir dir;
  docmine::testing::write_text(dir / "blocker", "x");
  EXPECT_THROW(emit_reports(RunReport{}, dir / "blocker" / "out"), IoError);
}
