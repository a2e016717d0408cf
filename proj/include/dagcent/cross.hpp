#ifndef DAGCENT_CROSS_HPP_
#define DAGCENT_CROSS_HPP_

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

#include "dagcent/distances.hpp"
#include "dagcent/errors.hpp"
#include "dagcent/polytree.hpp"
#include "dagcent/power_mean.hpp"

namespace dagcent {

struct CrossParams {
    std::uint32_t n = 1;
    /// Exponent of the power mean used by crosscloseness.
    double h = 1.0;
    Orientation orientation = Orientation::ancestors;
};

/// Symmetric matrix of horizontal distances over an ordered node list.
struct HorizontalMatrix {
    std::vector<NodeId> nodes;
    std::uint32_t n = 1;
    std::vector<double> values;  // row-major, nodes.size() squared

    std::size_t size() const noexcept { return nodes.size(); }
    double at(std::size_t i, std::size_t j) const { return values.at(i * nodes.size() + j); }
};

struct CrossScore {
    NodeId node;
    double score = 0.0;
};

/// |A ∩ B| / max(|A|, |B|) for ascending index sets; 0 when both are empty.
inline double overlap_ratio(const std::vector<NodeIndex>& a, const std::vector<NodeIndex>& b) {
    std::size_t denom = std::max(a.size(), b.size());
    if (denom == 0) return 0.0;
    std::size_t shared = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++shared;
            ++ia;
            ++ib;
        }
    }
    return static_cast<double>(shared) / static_cast<double>(denom);
}

/// Share of generation-n ancestors (or descendants) that i and j have in common.
inline double horzdist(const Polytree& g, NodeIndex i, NodeIndex j, std::uint32_t n,
                       Orientation orientation = Orientation::ancestors) {
    if (n < 1) throw InvalidDegreeError(n);
    return overlap_ratio(level_set(g, i, n, orientation).members, level_set(g, j, n, orientation).members);
}

inline double horzdist(const Polytree& g, const NodeId& i, const NodeId& j, std::uint32_t n,
                       Orientation orientation = Orientation::ancestors) {
    return horzdist(g, g.index_of(i), g.index_of(j), n, orientation);
}

/// Matrix of horzdist over the mask members, in ascending NodeId order.
inline HorizontalMatrix crossdistance(const Polytree& g, const SelectionMask& mask, const CrossParams& params) {
    if (params.n < 1) throw InvalidDegreeError(params.n);
    if (mask.empty()) throw EmptyMaskError();
    if (mask.universe() != g.size()) throw DomainError("selection mask belongs to a different graph");
    const std::size_t k = mask.size();
    std::vector<std::vector<NodeIndex>> levels;
    levels.reserve(k);
    HorizontalMatrix m;
    m.n = params.n;
    for (NodeIndex v : mask.members()) {
        m.nodes.push_back(g.id(v));
        levels.push_back(level_set(g, v, params.n, params.orientation).members);
    }
    m.values.assign(k * k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            double value = overlap_ratio(levels[a], levels[b]);
            m.values[a * k + b] = value;
            m.values[b * k + a] = value;
        }
    }
    return m;
}

/// Power mean (exponent params.h) of each mask member's row of H, excluding
/// the diagonal. A member with no other mask members scores 0.
inline std::vector<CrossScore> crosscloseness(const HorizontalMatrix& matrix, double h) {
    if (h == 0.0) throw ZeroExponentError();
    std::vector<CrossScore> scores;
    scores.reserve(matrix.size());
    std::vector<double> row;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        row.clear();
        for (std::size_t j = 0; j < matrix.size(); ++j)
            if (j != i) row.push_back(matrix.at(i, j));
        scores.push_back(CrossScore{matrix.nodes[i], row.empty() ? 0.0 : power_mean(row, h)});
    }
    return scores;
}

inline std::vector<CrossScore> crosscloseness(const Polytree& g, const SelectionMask& mask, const CrossParams& params) {
    if (params.h == 0.0) throw ZeroExponentError();
    return crosscloseness(crossdistance(g, mask, params), params.h);
}

/// Highest score first; ties broken by ascending NodeId.
inline void rank_scores(std::vector<CrossScore>& scores) {
    std::stable_sort(scores.begin(), scores.end(), [](const CrossScore& a, const CrossScore& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.node < b.node;
    });
}

}  // namespace dagcent

#endif  // DAGCENT_CROSS_HPP_
