#ifndef DAGCENT_ACQUISITION_HPP_
#define DAGCENT_ACQUISITION_HPP_

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "dagcent/distances.hpp"
#include "dagcent/errors.hpp"
#include "dagcent/io.hpp"
#include "dagcent/page_parser.hpp"
#include "dagcent/polytree.hpp"

namespace dagcent {

inline constexpr const char* kDefaultBaseUrl = "https://academictree.org/econ";
inline constexpr const char* kBaseUrlEnv = "DAGCENT_BASE_URL";
inline constexpr const char* kCacheDirEnv = "DAGCENT_CACHE_DIR";

struct FetchConfig {
    /// Empty disables the network; `file://<dir>` reads `<dir>/<pid>.html`.
    std::string base_url = kDefaultBaseUrl;
    /// Empty disables the on-disk cache.
    std::filesystem::path cache_dir;
    std::chrono::milliseconds delay{1000};
    /// nullopt means unlimited.
    std::optional<int> max_depth;
    std::chrono::seconds timeout{30};

    void validate() const {
        if (delay.count() < 0) throw DomainError("delay must be >= 0");
        if (max_depth && *max_depth < 1) throw DomainError("max depth must be >= 1");
        if (timeout.count() <= 0) throw DomainError("timeout must be > 0");
    }

    /// Applies DAGCENT_BASE_URL and DAGCENT_CACHE_DIR when set.
    FetchConfig with_environment() const {
        FetchConfig out = *this;
        if (const char* url = std::getenv(kBaseUrlEnv)) out.base_url = url;
        if (const char* dir = std::getenv(kCacheDirEnv)) out.cache_dir = dir;
        return out;
    }
};

/// Cache and fixture files are named after the pid, so it must be a safe filename.
inline void check_file_safe(const NodeId& pid) {
    const std::string& s = pid.str();
    bool ok = !s.empty() && s.front() != '.';
    for (char c : s) {
        bool valid = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                     c == '-' || c == '.';
        ok = ok && valid;
    }
    if (!ok) throw InvalidIdError("pid '" + s + "' is not usable as a file name");
}

class Clock {
public:
    using time_point = std::chrono::steady_clock::time_point;
    virtual ~Clock() = default;
    virtual time_point now() = 0;
    virtual void sleep_until(time_point t) = 0;
};

class SteadyClock final : public Clock {
public:
    time_point now() override { return std::chrono::steady_clock::now(); }
    void sleep_until(time_point t) override { std::this_thread::sleep_until(t); }
};

/// Test clock: time moves only when slept or advanced.
class ManualClock final : public Clock {
public:
    time_point now() override { return now_; }
    void sleep_until(time_point t) override {
        if (t > now_) now_ = t;
    }
    void advance(std::chrono::milliseconds d) { now_ += d; }

private:
    time_point now_{};
};

/// Supplies raw person pages. Throws NotFoundError or NetworkError.
class PageSource {
public:
    virtual ~PageSource() = default;
    virtual std::string fetch_page(const NodeId& pid) = 0;
};

/// Pages stored as `<dir>/<pid>.html`, e.g. a recorded fixture set.
class DirectorySource final : public PageSource {
public:
    explicit DirectorySource(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::string fetch_page(const NodeId& pid) override {
        check_file_safe(pid);
        auto path = dir_ / (pid.str() + ".html");
        if (!std::filesystem::exists(path)) throw NotFoundError(pid.str());
        return read_file(path);
    }

private:
    std::filesystem::path dir_;
};

/// Spaces consecutive requests to `inner` at least `delay` apart.
class PoliteSource final : public PageSource {
public:
    PoliteSource(PageSource& inner, Clock& clock, std::chrono::milliseconds delay)
        : inner_(inner), clock_(clock), delay_(delay) {}

    std::string fetch_page(const NodeId& pid) override {
        if (!requests_.empty()) clock_.sleep_until(requests_.back() + delay_);
        requests_.push_back(clock_.now());
        return inner_.fetch_page(pid);
    }

    /// Start time of every request issued so far.
    const std::vector<Clock::time_point>& request_times() const noexcept { return requests_; }

private:
    PageSource& inner_;
    Clock& clock_;
    std::chrono::milliseconds delay_;
    std::vector<Clock::time_point> requests_;
};

struct FetchStats {
    std::size_t network_requests = 0;
    std::size_t cache_reads = 0;
    std::size_t reads() const noexcept { return network_requests + cache_reads; }
};

/// Resolves pids to PersonRecords: disk cache first, then the (rate-limited)
/// network source. A cache hit never touches the network.
class PersonFetcher {
public:
    /// `network` may be null (offline). It must outlive the fetcher, as must `clock`.
    PersonFetcher(FetchConfig config, PageSource* network, Clock& clock, WarningSink warnings = {})
        : config_(std::move(config)), warnings_(std::move(warnings)) {
        config_.validate();
        if (network) polite_.emplace(*network, clock, config_.delay);
        if (!config_.cache_dir.empty()) std::filesystem::create_directories(config_.cache_dir);
    }

    PersonRecord fetch(const NodeId& pid) {
        if (!config_.cache_dir.empty()) {
            check_file_safe(pid);
            auto record_path = config_.cache_dir / (pid.str() + ".json");
            auto page_path = config_.cache_dir / (pid.str() + ".html");
            if (std::filesystem::exists(record_path)) {
                ++stats_.cache_reads;
                PersonRecord r = person_record_from_json(read_file(record_path));
                if (r.id != pid) throw ParseError("cached record " + record_path.string() + " has id '" + r.id.str() + "'");
                return r;
            }
            if (std::filesystem::exists(page_path)) {
                ++stats_.cache_reads;
                PersonRecord r = parse_person_page(pid, read_file(page_path), warnings_);
                write_file(record_path, to_json(r).dump(2) + "\n");
                return r;
            }
        }
        if (!polite_) throw NotFoundError(pid.str());
        ++stats_.network_requests;
        std::string page = polite_->fetch_page(pid);
        if (!config_.cache_dir.empty()) write_file(config_.cache_dir / (pid.str() + ".html"), page);
        PersonRecord r = parse_person_page(pid, page, warnings_);
        if (!config_.cache_dir.empty())
            write_file(config_.cache_dir / (pid.str() + ".json"), to_json(r).dump(2) + "\n");
        return r;
    }

    const FetchConfig& config() const noexcept { return config_; }
    const FetchStats& stats() const noexcept { return stats_; }
    const WarningSink& warnings() const noexcept { return warnings_; }

    std::vector<Clock::time_point> request_times() const {
        return polite_ ? polite_->request_times() : std::vector<Clock::time_point>{};
    }

private:
    FetchConfig config_;
    WarningSink warnings_;
    std::optional<PoliteSource> polite_;
    FetchStats stats_;
};

namespace detail {

/// Breadth-first crawl over parent links (ancestors) or child links
/// (descendants). Nodes up to max_depth are fetched (for their names);
/// nodes below max_depth are expanded. An edge that would close a cycle is
/// skipped with a warning. Fetch failures on non-root nodes leave a leaf.
inline Polytree crawl(PersonFetcher& fetcher, const NodeId& root, Orientation orientation) {
    const auto& warnings = fetcher.warnings();
    const auto max_depth = fetcher.config().max_depth;
    std::map<NodeId, std::string> names;
    std::vector<Edge> edges;
    std::map<NodeId, std::vector<NodeId>> children;  // for cycle checks

    auto reaches = [&](const NodeId& from, const NodeId& to) {
        std::set<NodeId> seen{from};
        std::vector<NodeId> stack{from};
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            auto it = children.find(v);
            if (it == children.end()) continue;
            for (const NodeId& w : it->second)
                if (seen.insert(w).second) stack.push_back(w);
        }
        return false;
    };

    std::deque<std::pair<NodeId, int>> queue{{root, 0}};
    names[root];
    bool is_root = true;
    while (!queue.empty()) {
        auto [pid, depth] = queue.front();
        queue.pop_front();
        std::optional<PersonRecord> record;
        if (is_root) {
            record = fetcher.fetch(pid);
            is_root = false;
        } else {
            try {
                record = fetcher.fetch(pid);
            } catch (const Error& e) {
                warn(warnings, "could not fetch '" + pid.str() + "', kept as leaf: " + e.what());
            }
        }
        if (!record) continue;
        names[pid] = record->name;
        if (max_depth && depth >= *max_depth) continue;

        const auto& links = orientation == Orientation::ancestors ? record->parent_ids : record->child_ids;
        for (const NodeId& other : links) {
            if (other == pid) continue;
            Edge e = orientation == Orientation::ancestors ? Edge{other, pid} : Edge{pid, other};
            if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
            if (reaches(e.child, e.parent)) {
                warn(warnings, "link " + e.parent.str() + " -> " + e.child.str() + " would close a cycle; skipped");
                continue;
            }
            edges.push_back(e);
            children[e.parent].push_back(e.child);
            if (names.emplace(other, std::string{}).second) queue.emplace_back(other, depth + 1);
        }
    }

    std::vector<Person> persons;
    for (auto& [id, name] : names) persons.push_back(Person{id, name});
    return Polytree::build(std::move(persons), std::move(edges));
}

}  // namespace detail

/// Ancestry of `pid`: edges parent -> child up to the configured depth.
inline Polytree build_ancestor_tree(PersonFetcher& fetcher, const NodeId& pid) {
    return detail::crawl(fetcher, pid, Orientation::ancestors);
}

/// Descendants of `pid`.
inline Polytree build_descendant_tree(PersonFetcher& fetcher, const NodeId& pid) {
    return detail::crawl(fetcher, pid, Orientation::descendants);
}

}  // namespace dagcent

#endif  // DAGCENT_ACQUISITION_HPP_
