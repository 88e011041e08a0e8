#include <algorithm>
#include <cctype>

#include "docmine/errors.hpp"
#include "docmine/github_provider.hpp"
#include "httplib.h"

namespace docmine {

namespace {

class HttplibTransport : public HttpTransport {
 public:
  HttpResponse get(const std::string& url,
                   const std::map<std::string, std::string>& headers) override {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw ProviderError("not an absolute url: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(30);
    client.set_read_timeout(60);
    httplib::Headers request_headers(headers.begin(), headers.end());
    auto result = client.Get(path, request_headers);
    if (!result) {
      throw ProviderError("GET " + url + " failed: " + httplib::to_string(result.error()));
    }
    HttpResponse response;
    response.status = result->status;
    response.body = result->body;
    for (const auto& [key, value] : result->headers) {
      std::string lower = key;
      std::transform(lower.begin(), lower.end(), lower.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      response.headers.emplace(std::move(lower), value);
    }
    return response;
  }
};

}  // namespace

std::unique_ptr<HttpTransport> make_http_transport() { return std::make_unique<HttplibTransport>(); }

}  // namespace docmine
