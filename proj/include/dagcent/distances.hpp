#ifndef DAGCENT_DISTANCES_HPP_
#define DAGCENT_DISTANCES_HPP_

#include <cstdint>
#include <limits>
#include <vector>

#include "dagcent/errors.hpp"
#include "dagcent/polytree.hpp"

namespace dagcent {

/// Edge-count distance, or +infinity for an unreachable node.
class ExtendedDistance {
public:
    constexpr ExtendedDistance() = default;
    constexpr explicit ExtendedDistance(std::uint32_t edges) : value_(edges) {}

    static constexpr ExtendedDistance infinity() { return ExtendedDistance{}; }

    constexpr bool is_finite() const noexcept { return value_ != kInf; }
    constexpr std::uint32_t edges() const noexcept { return value_; }
    constexpr double as_double() const noexcept {
        return is_finite() ? static_cast<double>(value_) : std::numeric_limits<double>::infinity();
    }

    friend constexpr bool operator==(ExtendedDistance, ExtendedDistance) = default;
    friend constexpr auto operator<=>(ExtendedDistance, ExtendedDistance) = default;

private:
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t value_ = kInf;
};

/// Distances indexed by NodeIndex (so iteration order is ascending NodeId).
using DistanceMap = std::vector<ExtendedDistance>;

enum class Orientation { ancestors, descendants };

namespace detail {

/// Breadth-first search following children (forward) or parents (backward),
/// stopping after `max_depth` levels.
inline DistanceMap bfs(const Polytree& g, NodeIndex src, bool forward,
                       std::uint32_t max_depth = std::numeric_limits<std::uint32_t>::max() - 1) {
    DistanceMap dist(g.size());
    std::vector<NodeIndex> frontier{src};
    std::vector<NodeIndex> next;
    dist[src] = ExtendedDistance{0};
    for (std::uint32_t level = 1; !frontier.empty() && level <= max_depth; ++level) {
        next.clear();
        for (NodeIndex v : frontier) {
            for (NodeIndex w : forward ? g.children(v) : g.parents(v)) {
                if (dist[w].is_finite()) continue;
                dist[w] = ExtendedDistance{level};
                next.push_back(w);
            }
        }
        frontier.swap(next);
    }
    return dist;
}

}  // namespace detail

/// dist(src -> x) along edge direction for every x.
inline DistanceMap distances_from(const Polytree& g, NodeIndex src) {
    return detail::bfs(g, src, true);
}
inline DistanceMap distances_from(const Polytree& g, const NodeId& src) {
    return distances_from(g, g.index_of(src));
}

/// dist(x -> dst) for every x; a BFS over reversed edges.
inline DistanceMap distances_to(const Polytree& g, NodeIndex dst) {
    return detail::bfs(g, dst, false);
}
inline DistanceMap distances_to(const Polytree& g, const NodeId& dst) {
    return distances_to(g, g.index_of(dst));
}

/// Nodes at shortest-path distance exactly `level` upstream (ancestors) or
/// downstream (descendants) of `origin`. A node reachable by paths of several
/// lengths belongs only to its shortest level.
struct LevelSet {
    NodeIndex origin = 0;
    std::uint32_t level = 0;
    std::vector<NodeIndex> members;  // ascending
};

inline LevelSet level_set(const Polytree& g, NodeIndex origin, std::uint32_t level, Orientation orientation) {
    if (origin >= g.size()) throw UnknownNodeError("#" + std::to_string(origin));
    LevelSet out{origin, level, {}};
    DistanceMap dist = detail::bfs(g, origin, orientation == Orientation::descendants, level);
    for (NodeIndex v = 0; v < g.size(); ++v)
        if (dist[v] == ExtendedDistance{level}) out.members.push_back(v);
    return out;
}

inline LevelSet level_set(const Polytree& g, const NodeId& origin, std::uint32_t level, Orientation orientation) {
    return level_set(g, g.index_of(origin), level, orientation);
}

}  // namespace dagcent

#endif  // DAGCENT_DISTANCES_HPP_
