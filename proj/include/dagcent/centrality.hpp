#ifndef DAGCENT_CENTRALITY_HPP_
#define DAGCENT_CENTRALITY_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dagcent/distances.hpp"
#include "dagcent/errors.hpp"
#include "dagcent/polytree.hpp"
#include "dagcent/power_mean.hpp"

namespace dagcent {

/// `out` measures distances along parent -> child edges from the node,
/// `in` measures distances toward the node.
enum class Direction { out, in };

struct HolderParams {
    double h = -1.0;
    Direction direction = Direction::out;
    /// nullopt means every node of the graph.
    std::optional<SelectionMask> targets;
};

/// Both the mean distance and its reciprocal are reported; callers pick one.
struct CentralityScore {
    NodeId node;
    double mean_distance = std::numeric_limits<double>::infinity();
    double closeness = 0.0;
};

/// 1/inf = 0 and 1/0 = inf.
inline double reciprocal(double mean_distance) {
    if (std::isinf(mean_distance)) return 0.0;
    if (mean_distance == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / mean_distance;
}

namespace detail {

inline CentralityScore score_from_terms(const Polytree& g, NodeIndex v, const std::vector<double>& terms, double h) {
    CentralityScore s{g.id(v)};
    if (terms.empty()) return s;  // J is empty: mean distance inf, closeness 0
    s.mean_distance = power_mean(terms, h);
    s.closeness = reciprocal(s.mean_distance);
    return s;
}

inline void warn_unreachable(const WarningSink& warnings, double h, std::size_t count) {
    if (h > 0 && count > 0) {
        warn(warnings, "h > 0 with unreachable targets: mean distance is infinite for " +
                           std::to_string(count) + " node(s)");
    }
}

}  // namespace detail

/// Hölder-mean distance and closeness to targets for every node.
///
/// For node i the targets are J = targets \ {i}. Terms are summed in
/// ascending NodeId order of j, so results do not depend on which traversal
/// produced the distances. With explicit targets one BFS runs per target;
/// with all targets one BFS runs per node.
inline std::vector<CentralityScore> holder_centrality(const Polytree& g, const HolderParams& params,
                                                      const WarningSink& warnings = {}) {
    if (params.h == 0.0) throw ZeroExponentError();
    if (g.empty()) throw EmptyGraphError();
    const bool out = params.direction == Direction::out;
    std::vector<CentralityScore> scores;
    scores.reserve(g.size());
    std::size_t unreachable = 0;
    std::vector<double> terms;

    if (!params.targets) {
        for (NodeIndex i = 0; i < g.size(); ++i) {
            DistanceMap dist = out ? distances_from(g, i) : distances_to(g, i);
            terms.clear();
            bool any_inf = false;
            for (NodeIndex j = 0; j < g.size(); ++j) {
                if (j == i) continue;
                terms.push_back(dist[j].as_double());
                any_inf |= !dist[j].is_finite();
            }
            unreachable += any_inf;
            scores.push_back(detail::score_from_terms(g, i, terms, params.h));
        }
        detail::warn_unreachable(warnings, params.h, unreachable);
        return scores;
    }

    const SelectionMask& mask = *params.targets;
    if (mask.universe() != g.size()) throw DomainError("selection mask belongs to a different graph");
    if (mask.empty()) throw EmptyMaskError();
    // Row k holds dist(i -> m_k) (out) or dist(m_k -> i) (in) for every i.
    std::vector<DistanceMap> rows;
    rows.reserve(mask.size());
    for (NodeIndex m : mask.members()) rows.push_back(out ? distances_to(g, m) : distances_from(g, m));

    for (NodeIndex i = 0; i < g.size(); ++i) {
        terms.clear();
        bool any_inf = false;
        for (std::size_t k = 0; k < mask.size(); ++k) {
            if (mask.members()[k] == i) continue;
            terms.push_back(rows[k][i].as_double());
            any_inf |= !rows[k][i].is_finite();
        }
        unreachable += any_inf;
        scores.push_back(detail::score_from_terms(g, i, terms, params.h));
    }
    detail::warn_unreachable(warnings, params.h, unreachable);
    return scores;
}

inline std::vector<CentralityScore> harmonic_centrality(const Polytree& g, Direction direction = Direction::out) {
    return holder_centrality(g, HolderParams{-1.0, direction, std::nullopt});
}

/// Closeness to the masked nodes only.
inline std::vector<CentralityScore> holder_nobelity(const Polytree& g, const SelectionMask& mask, double h,
                                                    Direction direction = Direction::out,
                                                    const WarningSink& warnings = {}) {
    if (mask.empty()) throw EmptyMaskError();
    return holder_centrality(g, HolderParams{h, direction, mask}, warnings);
}

inline std::vector<CentralityScore> harmonic_nobelity(const Polytree& g, const SelectionMask& mask,
                                                      Direction direction = Direction::out) {
    return holder_nobelity(g, mask, -1.0, direction);
}

/// Most central first; ties broken by ascending NodeId.
inline void rank_scores(std::vector<CentralityScore>& scores) {
    std::stable_sort(scores.begin(), scores.end(), [](const CentralityScore& a, const CentralityScore& b) {
        if (a.closeness != b.closeness) return a.closeness > b.closeness;
        return a.node < b.node;
    });
}

}  // namespace dagcent

#endif  // DAGCENT_CENTRALITY_HPP_
