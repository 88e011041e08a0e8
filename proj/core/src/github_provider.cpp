#include "docmine/github_provider.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <thread>

#include "docmine/errors.hpp"
#include "json.hpp"

using nlohmann::json;

namespace docmine {

namespace {

bool rate_limited(const HttpResponse& r) {
  if (r.status == 429) return true;
  if (r.status != 403) return false;
  if (auto it = r.headers.find("x-ratelimit-remaining"); it != r.headers.end() && it->second == "0") {
    return true;
  }
  return r.body.find("rate limit") != std::string::npos;
}

std::string header_or(const HttpResponse& r, const std::string& key, std::string fallback = {}) {
  auto it = r.headers.find(key);
  return it == r.headers.end() ? fallback : it->second;
}

json parse_array(const std::string& body) {
  json j = json::parse(body, nullptr, /*allow_exceptions=*/false);
  return j.is_array() ? j : json::array();
}

std::string id_of(const json& number) {
  if (number.is_number_unsigned()) return std::to_string(number.get<std::uint64_t>());
  if (number.is_number_integer()) return std::to_string(number.get<std::int64_t>());
  return number.is_string() ? number.get<std::string>() : std::string();
}

std::string join_query(const std::string& url, const std::string& query) {
  return url + (url.find('?') == std::string::npos ? "?" : "&") + query;
}

}  // namespace

std::string next_page_link(const std::string& link_header) {
  // <https://api.github.com/...&page=2>; rel="next", <...>; rel="last"
  std::size_t pos = 0;
  while (pos < link_header.size()) {
    const auto open = link_header.find('<', pos);
    if (open == std::string::npos) break;
    const auto close = link_header.find('>', open);
    if (close == std::string::npos) break;
    auto end = link_header.find(',', close);
    if (end == std::string::npos) end = link_header.size();
    const std::string params = link_header.substr(close + 1, end - close - 1);
    if (params.find("rel=\"next\"") != std::string::npos || params.find("rel=next") != std::string::npos) {
      return link_header.substr(open + 1, close - open - 1);
    }
    pos = end + 1;
  }
  return {};
}

GithubProvider::GithubProvider(GithubOptions options, std::unique_ptr<HttpTransport> transport)
    : options_(std::move(options)), transport_(std::move(transport)) {
  if (!transport_) throw ContractError("GithubProvider needs a transport");
  if (options_.max_attempts < 1) throw ContractError("max_attempts must be >= 1");
  while (!options_.base_url.empty() && options_.base_url.back() == '/') options_.base_url.pop_back();
  if (!options_.sleep) {
    options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
}

std::optional<HttpResponse> GithubProvider::get_with_retry(const std::string& url, bool& partial) {
  std::map<std::string, std::string> headers = {
      {"Accept", "application/vnd.github+json"},
      {"User-Agent", "docmine"},
      {"X-GitHub-Api-Version", "2022-11-28"},
  };
  if (!options_.token.empty()) headers["Authorization"] = "Bearer " + options_.token;

  std::chrono::milliseconds backoff = options_.initial_backoff;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    ++requests_;
    HttpResponse response = transport_->get(url, headers);
    if (response.status >= 200 && response.status < 300) return response;
    if (response.status == 401) throw AuthError("GitHub rejected the credentials (401) for " + url);

    const bool retryable = rate_limited(response) || response.status >= 500;
    if (!retryable) {
      throw ProviderError("GET " + url + " returned HTTP " + std::to_string(response.status));
    }
    if (attempt == options_.max_attempts) break;

    std::chrono::milliseconds wait = backoff;
    if (const std::string retry_after = header_or(response, "retry-after"); !retry_after.empty()) {
      try {
        wait = std::chrono::seconds{std::stoll(retry_after)};
      } catch (const std::exception&) {
      }
    }
    wait = std::min(wait, options_.max_backoff);
    spdlog::warn("GET {} -> HTTP {}, retry {}/{} in {} ms", url, response.status, attempt,
                 options_.max_attempts - 1, wait.count());
    options_.sleep(wait);
    backoff = std::min(backoff * 2, options_.max_backoff);
  }
  spdlog::warn("GET {}: giving up after {} attempts", url, options_.max_attempts);
  partial = true;
  return std::nullopt;
}

std::vector<std::string> GithubProvider::get_all_pages(
    const std::string& url, bool& partial, const std::function<bool(const std::string&)>& stop) {
  std::vector<std::string> pages;
  std::string next = url;
  while (!next.empty()) {
    auto response = get_with_retry(next, partial);
    if (!response) break;
    pages.push_back(response->body);
    if (stop && stop(response->body)) break;
    next = next_page_link(header_or(*response, "link"));
  }
  return pages;
}

RepoMeta GithubProvider::repo_meta(const std::string& repo_id) {
  RepoMeta meta;
  bool partial = false;
  if (auto repo = get_with_retry(options_.base_url + "/repos/" + repo_id, partial)) {
    const json j = json::parse(repo->body, nullptr, false);
    if (j.is_object() && j.contains("fork") && j["fork"].is_boolean()) meta.fork = j["fork"].get<bool>();
  }
  // With per_page=1 the page number of rel="last" equals the pull request count.
  const std::string url = options_.base_url + "/repos/" + repo_id + "/pulls?state=all&per_page=1";
  if (auto first = get_with_retry(url, partial)) {
    const std::string link = header_or(*first, "link");
    const auto last = link.find("rel=\"last\"");
    std::uint64_t count = parse_array(first->body).size();
    if (last != std::string::npos) {
      const auto open = link.rfind('<', last);
      const auto close = link.find('>', open);
      const std::string target = link.substr(open + 1, close - open - 1);
      for (const char* key : {"?page=", "&page="}) {
        if (auto p = target.find(key); p != std::string::npos) {
          count = std::stoull(target.substr(p + 6));
        }
      }
    }
    meta.pull_request_count = count;
  }
  return meta;
}

ProviderBatch GithubProvider::fetch(const std::string& repo_id, const RecencyWindow& window) {
  ProviderBatch batch;
  const std::string repo = options_.base_url + "/repos/" + repo_id;
  const std::string per_page = "per_page=" + std::to_string(options_.per_page);
  const std::string since = format_timestamp(window.start());
  const Timestamp start = window.start();

  // Normalized dump entries go through the same parser as offline dumps.
  auto add = [&](ArtifactKind kind, const json& entry) {
    try {
      batch.records.push_back(parse_dump_line(kind, entry.dump()));
    } catch (const ParseError& e) {
      ++batch.malformed;
      batch.warnings.push_back(std::string(to_string(kind)) + ": " + e.what());
    }
  };
  auto comment_bodies = [&](const std::string& url) {
    json out = json::array();
    for (const std::string& page : get_all_pages(join_query(url, per_page), batch.partial, {})) {
      for (const json& c : parse_array(page)) {
        if (c.is_object() && c.contains("body")) out.push_back({{"body", c["body"]}});
      }
    }
    return out;
  };
  auto count_of = [](const json& item, const char* key) -> std::int64_t {
    auto it = item.find(key);
    return it != item.end() && it->is_number_integer() ? it->get<std::int64_t>() : 1;
  };

  std::size_t before = 0;

  for (const std::string& page :
       get_all_pages(repo + "/issues?state=all&since=" + since + "&" + per_page, batch.partial, {})) {
    for (const json& item : parse_array(page)) {
      if (!item.is_object() || item.contains("pull_request")) continue;
      json entry = {{"number", item.value("number", json())},
                    {"created_at", item.value("created_at", json())},
                    {"title", item.value("title", json())},
                    {"body", item.value("body", json())},
                    {"comments", json::array()}};
      if (count_of(item, "comments") > 0 && item.contains("number")) {
        entry["comments"] =
            comment_bodies(repo + "/issues/" + id_of(item["number"]) + "/comments");
      }
      add(ArtifactKind::Issue, entry);
    }
  }
  if (batch.records.size() == before) batch.blank.insert(ArtifactKind::Issue);
  before = batch.records.size();

  // Newest first, so paging can stop once a page reaches past the window start.
  auto page_past_window = [&](const std::string& body) {
    const json items = parse_array(body);
    if (items.empty()) return true;
    const json& last = items.back();
    if (!last.is_object() || !last.contains("created_at") || !last["created_at"].is_string()) return false;
    try {
      return parse_timestamp(last["created_at"].get<std::string>()) < start;
    } catch (const ParseError&) {
      return false;
    }
  };
  for (const std::string& page :
       get_all_pages(repo + "/pulls?state=all&sort=created&direction=desc&" + per_page,
                     batch.partial, page_past_window)) {
    for (const json& item : parse_array(page)) {
      if (!item.is_object()) continue;
      json entry = {{"number", item.value("number", json())},
                    {"created_at", item.value("created_at", json())},
                    {"title", item.value("title", json())},
                    {"body", item.value("body", json())},
                    {"comments", json::array()},
                    {"review_comments", json::array()}};
      bool in_window = false;
      try {
        in_window = entry["created_at"].is_string() &&
                    parse_timestamp(entry["created_at"].get<std::string>()) >= start;
      } catch (const ParseError&) {
      }
      if (in_window && item.contains("number")) {
        const std::string number = id_of(item["number"]);
        entry["comments"] = comment_bodies(repo + "/issues/" + number + "/comments");
        entry["review_comments"] = comment_bodies(repo + "/pulls/" + number + "/comments");
      }
      add(ArtifactKind::PullRequest, entry);
    }
  }
  if (batch.records.size() == before) batch.blank.insert(ArtifactKind::PullRequest);
  before = batch.records.size();

  for (const std::string& page :
       get_all_pages(repo + "/commits?since=" + since + "&" + per_page, batch.partial, {})) {
    for (const json& item : parse_array(page)) {
      if (!item.is_object()) continue;
      const json commit = item.value("commit", json::object());
      const json author = commit.is_object() ? commit.value("author", json::object()) : json::object();
      json entry = {{"sha", item.value("sha", json())},
                    {"created_at", author.is_object() ? author.value("date", json()) : json()},
                    {"message", commit.is_object() ? commit.value("message", json()) : json()},
                    {"comments", json::array()}};
      const std::int64_t comment_count =
          commit.is_object() && commit.contains("comment_count") ? count_of(commit, "comment_count") : 0;
      if (comment_count > 0 && item.contains("sha") && item["sha"].is_string()) {
        entry["comments"] = comment_bodies(repo + "/commits/" + item["sha"].get<std::string>() + "/comments");
      }
      add(ArtifactKind::Commit, entry);
    }
  }
  if (batch.records.size() == before) batch.blank.insert(ArtifactKind::Commit);
  return batch;
}

}  // namespace docmine
