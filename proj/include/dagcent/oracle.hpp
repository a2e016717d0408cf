#ifndef DAGCENT_ORACLE_HPP_
#define DAGCENT_ORACLE_HPP_

// Brute-force reference implementations for verification. Only the graph's
// sorted edge list is used here; nothing from the BFS engine is shared.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dagcent/errors.hpp"
#include "dagcent/polytree.hpp"

namespace dagcent::oracle {

inline constexpr std::size_t kMaxNodes = 200;
inline constexpr long double kInf = std::numeric_limits<long double>::infinity();

/// Row-major all-pairs matrix; entry (s, t) is dist(s -> t), +inf if unreachable.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<long double> d;
    long double at(std::size_t s, std::size_t t) const { return d[s * n + t]; }
};

struct Score {
    long double mean_distance = kInf;
    long double closeness = 0;
};

namespace detail {

inline void check_size(const Polytree& g) {
    if (g.size() > kMaxNodes) throw TooLargeError(g.size(), kMaxNodes);
}

/// Edge list as index pairs, by position in the (sorted) person list.
inline std::vector<std::pair<std::size_t, std::size_t>> index_edges(const Polytree& g) {
    std::map<NodeId, std::size_t> pos;
    for (std::size_t k = 0; k < g.size(); ++k) pos[g.persons()[k].id] = k;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Edge& e : g.edges()) out.emplace_back(pos.at(e.parent), pos.at(e.child));
    return out;
}

}  // namespace detail

/// Floyd–Warshall over unit edge weights.
inline DistanceMatrix all_pairs(const Polytree& g) {
    detail::check_size(g);
    DistanceMatrix m{g.size(), std::vector<long double>(g.size() * g.size(), kInf)};
    for (std::size_t v = 0; v < m.n; ++v) m.d[v * m.n + v] = 0;
    for (auto [p, c] : detail::index_edges(g)) m.d[p * m.n + c] = 1;
    for (std::size_t k = 0; k < m.n; ++k)
        for (std::size_t s = 0; s < m.n; ++s)
            for (std::size_t t = 0; t < m.n; ++t)
                if (m.d[s * m.n + k] + m.d[k * m.n + t] < m.d[s * m.n + t])
                    m.d[s * m.n + t] = m.d[s * m.n + k] + m.d[k * m.n + t];
    return m;
}

/// Direct evaluation of the Hölder mean in extended precision with naive
/// summation. `out` selects dist(i -> j), otherwise dist(j -> i).
/// `targets` holds one flag per node; nullopt means all nodes.
inline std::vector<Score> holder(const Polytree& g, long double h, bool out,
                                 const std::optional<std::vector<bool>>& targets = std::nullopt) {
    if (h == 0) throw ZeroExponentError();
    DistanceMatrix m = all_pairs(g);
    std::vector<Score> scores(m.n);
    for (std::size_t i = 0; i < m.n; ++i) {
        std::vector<long double> terms;
        for (std::size_t j = 0; j < m.n; ++j) {
            if (j == i) continue;
            if (targets && !(*targets)[j]) continue;
            terms.push_back(out ? m.at(i, j) : m.at(j, i));
        }
        if (terms.empty()) continue;
        long double sum = 0;
        bool saw_inf = false;
        for (long double t : terms) {
            if (std::isinf(t)) {
                saw_inf = true;
                continue;  // inf^h = 0 for h < 0
            }
            sum += std::pow(t, h);
        }
        long double mean;
        if (h > 0 && saw_inf) {
            mean = kInf;
        } else if (sum == 0) {
            mean = kInf;
        } else {
            mean = std::pow(sum / static_cast<long double>(terms.size()), 1 / h);
        }
        scores[i].mean_distance = mean;
        scores[i].closeness = std::isinf(mean) ? 0 : 1 / mean;
    }
    return scores;
}

/// Generation-n relatives by exhaustive path enumeration: every directed path
/// of length <= n ending at (ancestors) or starting from (descendants) the
/// origin is walked, and a node is kept iff its shortest such path has
/// length exactly n.
inline std::set<std::size_t> generation(const Polytree& g, std::size_t origin, unsigned n, bool ancestors) {
    detail::check_size(g);
    std::vector<std::vector<std::size_t>> step(g.size());
    for (auto [p, c] : detail::index_edges(g)) {
        if (ancestors)
            step[c].push_back(p);
        else
            step[p].push_back(c);
    }
    std::vector<unsigned> shortest(g.size(), std::numeric_limits<unsigned>::max());
    // Explicit stack of (node, depth); paths in a DAG are simple.
    std::vector<std::pair<std::size_t, unsigned>> stack{{origin, 0}};
    while (!stack.empty()) {
        auto [v, depth] = stack.back();
        stack.pop_back();
        if (depth < shortest[v]) shortest[v] = depth;
        if (depth == n) continue;
        for (std::size_t w : step[v]) stack.emplace_back(w, depth + 1);
    }
    std::set<std::size_t> out;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (shortest[v] == n) out.insert(v);
    return out;
}

/// Horizontal-distance matrix over the flagged nodes (ascending order).
inline std::vector<std::vector<long double>> cross(const Polytree& g, const std::vector<bool>& mask, unsigned n,
                                                   bool ancestors = true) {
    if (n < 1) throw InvalidDegreeError(n);
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (mask[v]) members.push_back(v);
    std::vector<std::set<std::size_t>> sets;
    for (std::size_t v : members) sets.push_back(generation(g, v, n, ancestors));
    std::vector<std::vector<long double>> h(members.size(), std::vector<long double>(members.size(), 0));
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = 0; b < members.size(); ++b) {
            std::size_t shared = 0;
            for (std::size_t x : sets[a]) shared += sets[b].count(x);
            std::size_t denom = std::max(sets[a].size(), sets[b].size());
            // Double division is correctly rounded, so equal ratios compare equal.
            h[a][b] = denom == 0 ? 0 : static_cast<double>(shared) / static_cast<double>(denom);
        }
    }
    return h;
}

}  // namespace dagcent::oracle

#endif  // DAGCENT_ORACLE_HPP_
