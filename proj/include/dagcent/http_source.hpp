#ifndef DAGCENT_HTTP_SOURCE_HPP_
#define DAGCENT_HTTP_SOURCE_HPP_

// Live network access. Kept apart from acquisition.hpp so that only the CLI
// pulls in cpp-httplib and OpenSSL.

#include <chrono>
#include <memory>
#include <string>

#include "httplib.h"

#include "dagcent/acquisition.hpp"

namespace dagcent {

/// GET `<base_url>/peopleinfo.php?pid=<pid>`.
class HttpSource final : public PageSource {
public:
    HttpSource(const std::string& base_url, std::chrono::seconds timeout) {
        auto scheme_end = base_url.find("://");
        if (scheme_end == std::string::npos) throw DomainError("base URL needs a scheme: '" + base_url + "'");
        auto path_start = base_url.find('/', scheme_end + 3);
        origin_ = base_url.substr(0, path_start);
        prefix_ = path_start == std::string::npos ? std::string{} : base_url.substr(path_start);
        while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
        client_ = std::make_unique<httplib::Client>(origin_);
        client_->set_connection_timeout(timeout);
        client_->set_read_timeout(timeout);
        client_->set_follow_location(true);
    }

    std::string fetch_page(const NodeId& pid) override {
        std::string path = prefix_ + "/peopleinfo.php?pid=" + httplib::detail::encode_query_param(pid.str());
        auto res = client_->Get(path);
        if (!res) throw NetworkError("GET " + origin_ + path + " failed: " + httplib::to_string(res.error()));
        if (res->status == 404) throw NotFoundError(pid.str());
        if (res->status != 200)
            throw NetworkError("GET " + origin_ + path + " returned HTTP " + std::to_string(res->status));
        return res->body;
    }

private:
    std::string origin_;
    std::string prefix_;
    std::unique_ptr<httplib::Client> client_;
};

/// Source for a configured base URL: none when empty, a directory for
/// `file://`, HTTP(S) otherwise.
inline std::unique_ptr<PageSource> make_page_source(const FetchConfig& config) {
    if (config.base_url.empty()) return nullptr;
    constexpr std::string_view file_scheme = "file://";
    if (config.base_url.starts_with(file_scheme))
        return std::make_unique<DirectorySource>(config.base_url.substr(file_scheme.size()));
    return std::make_unique<HttpSource>(config.base_url, config.timeout);
}

}  // namespace dagcent

#endif  // DAGCENT_HTTP_SOURCE_HPP_
