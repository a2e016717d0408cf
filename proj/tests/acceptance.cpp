// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dagcent/acquisition.hpp"
#include "dagcent/centrality.hpp"
#include "dagcent/cross.hpp"
#include "dagcent/io.hpp"
#include "dagcent/oracle.hpp"
#include "support/random_dag.hpp"

namespace {

using namespace dagcent;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

const fs::path kFixtures = DAGCENT_FIXTURE_DIR;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

bool close_rel(long double engine, long double reference, long double rel) {
    if (std::isinf(reference) || std::isinf(engine)) return engine == reference;
    if (reference == 0) return engine == 0;
    return std::fabs(engine - reference) <= rel * std::fabs(reference);
}

int failures = 0;

void report(int number, const char* title, const std::function<Outcome()>& body, double limit_s = 0) {
    auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "took %.3f s, limit %.0f s", secs, limit_s);
        o.fail(buf);
    }
    std::printf("%s [%d] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", number, title, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
}

Outcome kinship() {
    Outcome o;
    Polytree g = load_graph(kFixtures / "pedigree.json");
    struct Case {
        const char *a, *b;
        std::uint32_t n;
        double want;
    };
    for (auto c : {Case{"S1", "S2", 1, 1.0}, Case{"S1", "H", 1, 0.5}, Case{"S1", "U", 1, 0.0},
                   Case{"C1", "C2", 2, 0.5}, Case{"D1", "D2", 3, 0.25}}) {
        double got = horzdist(g, NodeId(c.a), NodeId(c.b), c.n);
        if (got != c.want) o.fail(std::string(c.a) + "/" + c.b + " = " + format_real(got));
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(2024);
    const double probs[] = {0.05, 0.2, 0.5};
    std::uniform_int_distribution<std::size_t> size_dist(1, 50);
    std::size_t comparisons = 0;
    for (int trial = 0; trial < 200 && o.ok; ++trial) {
        Polytree g = testing::random_dag(rng, size_dist(rng), probs[trial % 3]);
        for (std::size_t mask_size : {std::size_t{1}, std::size_t{5}, g.size()}) {
            SelectionMask mask = testing::random_mask(rng, g, mask_size);
            std::vector<bool> flags(g.size());
            for (NodeIndex v : mask.members()) flags[v] = true;
            for (Direction dir : {Direction::out, Direction::in}) {
                for (double h : {-4.0, -1.0, 1.0}) {
                    auto engine = holder_nobelity(g, mask, h, dir);
                    auto ref = oracle::holder(g, h, dir == Direction::out, flags);
                    for (std::size_t k = 0; k < g.size(); ++k) {
                        ++comparisons;
                        if (!close_rel(engine[k].mean_distance, ref[k].mean_distance, 1e-12L) ||
                            !close_rel(engine[k].closeness, ref[k].closeness, 1e-12L))
                            o.fail("trial " + std::to_string(trial) + " node " + g.id(static_cast<NodeIndex>(k)).str());
                    }
                }
            }
            for (std::uint32_t n = 1; n <= 3; ++n) {
                auto m = crossdistance(g, mask, CrossParams{n});
                auto ref = oracle::cross(g, flags, n);
                for (std::size_t i = 0; i < m.size(); ++i)
                    for (std::size_t j = 0; j < m.size(); ++j)
                        if (static_cast<long double>(m.at(i, j)) != ref[i][j])
                            o.fail("cross trial " + std::to_string(trial) + " n=" + std::to_string(n));
            }
        }
    }
    if (o.ok) o.detail = std::to_string(comparisons) + " scores";
    return o;
}

Outcome unconnected() {
    Outcome o;
    // r -> a, r -> b, x isolated: r reaches a and b but not x.
    Polytree g = testing::make_graph({{"r", "a"}, {"r", "b"}}, {"x"});
    NodeIndex r = g.index_of(NodeId("r"));
    auto arith = holder_centrality(g, HolderParams{1, Direction::out, std::nullopt});
    if (!std::isinf(arith[r].mean_distance)) o.fail("h=1 mean distance is finite");
    if (arith[r].closeness != 0) o.fail("h=1 closeness is not 0");
    auto harm = harmonic_centrality(g);
    // Reciprocals {1, 1, 0} over three targets: closeness 2/3.
    if (!(harm[r].closeness == 2.0 / 3.0)) o.fail("h=-1 closeness " + format_real(harm[r].closeness));
    if (harm[r].mean_distance != 1.5) o.fail("h=-1 mean distance " + format_real(harm[r].mean_distance));
    // A node that reaches every other node keeps a finite h=1 mean.
    Polytree full = testing::make_graph({{"r", "a"}, {"r", "b"}, {"a", "c"}});
    auto ok = holder_centrality(full, HolderParams{1, Direction::out, std::nullopt});
    if (ok[full.index_of(NodeId("r"))].mean_distance != 4.0 / 3.0) o.fail("h=1 reachable mean");
    return o;
}

Outcome power_mean_properties() {
    Outcome o;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> len(1, 20), val(1, 30);
    const double hs[] = {-200, -16, -4, -2, -1, -0.5, 0.5, 1, 2, 4};
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<ExtendedDistance> d(static_cast<std::size_t>(len(rng)));
        std::vector<double> x;
        for (auto& e : d) {
            e = ExtendedDistance{static_cast<std::uint32_t>(val(rng))};
            x.push_back(e.as_double());
        }
        double prev = 0;
        for (double h : hs) {
            double m = holder_mean(d, h);
            if (m < prev * (1 - 1e-14)) o.fail("not monotone at h=" + format_real(h));
            prev = m;
        }
        double lo = *std::min_element(x.begin(), x.end());
        double m200 = holder_mean(d, -200);
        if (m200 < lo * (1 - 1e-12) || m200 > lo * 1.02) o.fail("h=-200 not within 2% of min");
        long double sum = 0, inv = 0;
        for (double v : x) {
            sum += v;
            inv += 1.0L / v;
        }
        long double k = static_cast<long double>(x.size());
        if (!close_rel(holder_mean(d, 1), sum / k, 1e-12L)) o.fail("arithmetic mismatch");
        if (!close_rel(holder_mean(d, -1), k / inv, 1e-12L)) o.fail("harmonic mismatch");
    }
    return o;
}

Outcome reduction() {
    Outcome o;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Polytree g = testing::random_dag(rng, 1 + trial % 50, trial % 2 ? 0.3 : 0.08);
        for (Direction dir : {Direction::out, Direction::in}) {
            for (double h : {-4.0, -1.0, 1.0, 2.0}) {
                auto all = holder_centrality(g, HolderParams{h, dir, std::nullopt});
                auto masked = holder_nobelity(g, SelectionMask::all(g), h, dir);
                for (std::size_t k = 0; k < all.size(); ++k)
                    if (std::bit_cast<std::uint64_t>(all[k].mean_distance) !=
                            std::bit_cast<std::uint64_t>(masked[k].mean_distance) ||
                        std::bit_cast<std::uint64_t>(all[k].closeness) != std::bit_cast<std::uint64_t>(masked[k].closeness))
                        o.fail("trial " + std::to_string(trial));
            }
        }
    }
    return o;
}

// Random subgraph over a shared id universe so that merges overlap.
Polytree random_piece(std::mt19937_64& rng) {
    static const Polytree base = [] {
        std::mt19937_64 r(99);
        return testing::random_dag(r, 30, 0.2);
    }();
    std::bernoulli_distribution keep_node(0.6), keep_edge(0.7);
    std::vector<Person> persons;
    std::set<NodeId> kept;
    for (const Person& p : base.persons())
        if (keep_node(rng)) {
            persons.push_back(p);
            kept.insert(p.id);
        }
    std::vector<Edge> edges;
    for (const Edge& e : base.edges())
        if (kept.count(e.parent) && kept.count(e.child) && keep_edge(rng)) edges.push_back(e);
    return Polytree::build(std::move(persons), std::move(edges));
}

bool same_sets(const Polytree& a, const Polytree& b) {
    std::vector<NodeId> na, nb;
    for (const Person& p : a.persons()) na.push_back(p.id);
    for (const Person& p : b.persons()) nb.push_back(p.id);
    auto ea = std::vector<Edge>(a.edges().begin(), a.edges().end());
    auto eb = std::vector<Edge>(b.edges().begin(), b.edges().end());
    return na == nb && ea == eb;
}

Outcome merge_algebra() {
    Outcome o;
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        Polytree a = random_piece(rng), b = random_piece(rng), c = random_piece(rng);
        if (!same_sets(merge(a, a), a)) o.fail("idempotence, trial " + std::to_string(trial));
        if (!same_sets(merge(a, b), merge(b, a))) o.fail("commutativity, trial " + std::to_string(trial));
        if (!same_sets(merge(merge(a, b), c), merge(a, merge(b, c))))
            o.fail("associativity, trial " + std::to_string(trial));
    }
    // Two ancestor trees sharing the 200 -> 300 lineage.
    DirectorySource pages(kFixtures / "academictree");
    ManualClock clock;
    FetchConfig cfg;
    cfg.base_url.clear();
    PersonFetcher fetcher(cfg, &pages, clock);
    Polytree m = merge(build_ancestor_tree(fetcher, NodeId("100")), build_ancestor_tree(fetcher, NodeId("700")));
    std::size_t shared = 0;
    for (const Person& p : m.persons()) shared += p.id == NodeId("200") || p.id == NodeId("300");
    if (shared != 2 || m.size() != 4) o.fail("shared lineage has " + std::to_string(m.size()) + " nodes");
    return o;
}

Outcome acquisition() {
    Outcome o;
    using namespace std::chrono_literals;
    struct Counting final : PageSource {
        DirectorySource inner{kFixtures / "academictree"};
        std::map<std::string, int> calls;
        std::string fetch_page(const NodeId& pid) override {
            ++calls[pid.str()];
            return inner.fetch_page(pid);
        }
    };
    std::vector<std::string> first;
    for (int run = 0; run < 2; ++run) {
        std::vector<std::string> outputs;
        for (auto [pid, orientation] : {std::pair{"950", Orientation::ancestors}, std::pair{"100", Orientation::ancestors},
                                        std::pair{"500", Orientation::descendants},
                                        std::pair{"300", Orientation::descendants}}) {
            Counting source;
            ManualClock clock;
            FetchConfig cfg;
            cfg.base_url.clear();
            cfg.delay = 100ms;
            PersonFetcher fetcher(cfg, &source, clock);
            Polytree g = orientation == Orientation::ancestors ? build_ancestor_tree(fetcher, NodeId(pid))
                                                               : build_descendant_tree(fetcher, NodeId(pid));
            outputs.push_back(to_canonical_json(g));
            for (auto& [id, n] : source.calls)
                if (n != 1) o.fail("pid " + id + " fetched " + std::to_string(n) + " times");
            auto times = fetcher.request_times();
            if (times.size() != source.calls.size()) o.fail("request log size");
            for (std::size_t k = 1; k < times.size(); ++k)
                if (times[k] - times[k - 1] < 100ms) o.fail("requests closer than 100 ms");
        }
        if (run == 0)
            first = outputs;
        else if (outputs != first)
            o.fail("canonical JSON differs between runs");
    }
    return o;
}

Outcome desk_scale() {
    Outcome o;
    std::mt19937_64 rng(8);
    Polytree g = testing::random_sparse_dag(rng, 10000, 30000);
    SelectionMask mask = testing::random_mask(rng, g, 100);
    auto start = Clock::now();
    auto scores = harmonic_nobelity(g, mask);
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (scores.size() != 10000) o.fail("wrong score count");
    if (secs >= 5) o.fail("nobelity took " + format_real(secs) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "nobelity %.3f s", secs);
    if (o.ok) o.detail = buf;
    return o;
}

}  // namespace

int main() {
    report(1, "kinship calibration", kinship, 1);
    report(2, "oracle equivalence", oracle_equivalence, 60);
    report(3, "unconnected-graph semantics", unconnected);
    report(4, "power-mean properties", power_mean_properties);
    report(5, "masked reduction is bit-identical", reduction);
    report(6, "merge algebra", merge_algebra);
    report(7, "acquisition determinism and politeness", acquisition);
    report(8, "desk-scale nobelity", desk_scale);
    std::printf("%d/8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
