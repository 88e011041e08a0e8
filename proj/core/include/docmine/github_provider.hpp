#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "docmine/artifact_ingest.hpp"

namespace docmine {

struct HttpResponse {
  int status = 0;
  std::map<std::string, std::string> headers;  // keys lowercased
  std::string body;
};

/// Minimal blocking GET interface so the API client can be exercised without network.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  /// `url` is absolute. Throws ProviderError on connection failure.
  virtual HttpResponse get(const std::string& url,
                           const std::map<std::string, std::string>& headers) = 0;
};

/// cpp-httplib backed transport (http and https).
std::unique_ptr<HttpTransport> make_http_transport();

struct GithubOptions {
  std::string base_url = "https://api.github.com";
  std::string token;  // empty: unauthenticated
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::milliseconds max_backoff{60000};
  int per_page = 100;
  /// Replaced in tests to avoid real sleeping.
  std::function<void(std::chrono::milliseconds)> sleep;
};

/// Environment variable consulted for the API token.
inline constexpr const char* kTokenEnvVar = "GITHUB_TOKEN";

/// Live REST API provider. Listings are paginated through the Link header, rate-limit
/// responses (429, or 403 with an exhausted quota) are retried with exponential backoff
/// up to max_attempts, after which the batch is marked partial. 401 throws AuthError.
class GithubProvider : public ArtifactProvider {
 public:
  GithubProvider(GithubOptions options, std::unique_ptr<HttpTransport> transport);
  std::string name() const override { return "api"; }
  ProviderBatch fetch(const std::string& repo_id, const RecencyWindow& window) override;
  RepoMeta repo_meta(const std::string& repo_id) override;

  /// Number of HTTP requests issued so far.
  std::size_t request_count() const { return requests_; }

 private:
  std::optional<HttpResponse> get_with_retry(const std::string& url, bool& partial);
  std::vector<std::string> get_all_pages(const std::string& url, bool& partial,
                                         const std::function<bool(const std::string&)>& stop);

  GithubOptions options_;
  std::unique_ptr<HttpTransport> transport_;
  std::size_t requests_ = 0;
};

/// Parses an RFC 8288 Link header and returns the rel="next" target, or "".
std::string next_page_link(const std::string& link_header);

}  // namespace docmine
