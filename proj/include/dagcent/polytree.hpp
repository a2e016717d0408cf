#ifndef DAGCENT_POLYTREE_HPP_
#define DAGCENT_POLYTREE_HPP_

#include <algorithm>
#include <cstddef>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dagcent/errors.hpp"

namespace dagcent {

/// External identity of a vertex (a genealogy-site pid or any user-chosen string).
class NodeId {
public:
    NodeId() = default;
    explicit NodeId(std::string value) : value_(std::move(value)) {
        if (value_.empty()) throw InvalidIdError("node id must be nonempty");
    }

    const std::string& str() const noexcept { return value_; }

    friend bool operator==(const NodeId&, const NodeId&) = default;
    friend std::strong_ordering operator<=>(const NodeId& a, const NodeId& b) {
        return a.value_.compare(b.value_) <=> 0;
    }

private:
    std::string value_;
};

struct Person {
    NodeId id;
    std::string name;

    friend bool operator==(const Person&, const Person&) = default;
};

/// Directed edge, oriented parent -> child.
struct Edge {
    NodeId parent;
    NodeId child;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dense vertex index. Indices follow ascending NodeId order.
using NodeIndex = std::uint32_t;

struct BuildOptions {
    /// Reject edges whose endpoints are not among the given persons instead of
    /// registering them with an empty name.
    bool strict = false;
};

/// Immutable directed acyclic graph with edges parent -> child.
class Polytree {
public:
    Polytree() = default;

    /// Validates and freezes a graph. Duplicate edges are collapsed.
    static Polytree build(std::vector<Person> persons, std::vector<Edge> edges,
                          const BuildOptions& options = {}) {
        std::sort(persons.begin(), persons.end(),
                  [](const Person& a, const Person& b) { return a.id < b.id; });
        for (std::size_t k = 1; k < persons.size(); ++k) {
            if (persons[k].id == persons[k - 1].id) throw DuplicateIdError(persons[k].id.str());
        }

        for (const Edge& e : edges) {
            if (e.parent == e.child) throw SelfLoopError(e.parent.str());
        }

        std::vector<Person> extra;
        auto known = [&](const NodeId& id) {
            return std::binary_search(
                persons.begin(), persons.end(), id,
                [](const auto& a, const auto& b) { return key(a) < key(b); });
        };
        for (const Edge& e : edges) {
            for (const NodeId* id : {&e.parent, &e.child}) {
                if (known(*id)) continue;
                if (options.strict) throw UnknownNodeError(id->str());
                extra.push_back(Person{*id, {}});
            }
        }
        if (!extra.empty()) {
            std::sort(extra.begin(), extra.end(),
                      [](const Person& a, const Person& b) { return a.id < b.id; });
            extra.erase(std::unique(extra.begin(), extra.end(),
                                    [](const Person& a, const Person& b) { return a.id == b.id; }),
                        extra.end());
            std::vector<Person> all;
            all.reserve(persons.size() + extra.size());
            std::merge(std::make_move_iterator(persons.begin()), std::make_move_iterator(persons.end()),
                       std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()),
                       std::back_inserter(all),
                       [](const Person& a, const Person& b) { return a.id < b.id; });
            persons = std::move(all);
        }

        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        Polytree g;
        g.persons_ = std::move(persons);
        g.edges_ = std::move(edges);
        g.index_.reserve(g.persons_.size());
        for (std::size_t k = 0; k < g.persons_.size(); ++k) {
            g.index_.emplace(g.persons_[k].id.str(), static_cast<NodeIndex>(k));
        }
        g.build_adjacency();
        g.check_acyclic();
        return g;
    }

    std::size_t size() const noexcept { return persons_.size(); }
    bool empty() const noexcept { return persons_.empty(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Person> persons() const noexcept { return persons_; }
    const Person& person(NodeIndex v) const { return persons_.at(v); }
    const NodeId& id(NodeIndex v) const { return persons_.at(v).id; }

    /// Edges sorted lexicographically by (parent, child).
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::optional<NodeIndex> find(const NodeId& id) const {
        auto it = index_.find(id.str());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const NodeId& id) const { return find(id).has_value(); }

    NodeIndex index_of(const NodeId& id) const {
        if (auto v = find(id)) return *v;
        throw UnknownNodeError(id.str());
    }

    std::span<const NodeIndex> children(NodeIndex v) const {
        return {child_targets_.data() + child_offsets_[v], child_targets_.data() + child_offsets_[v + 1]};
    }
    std::span<const NodeIndex> parents(NodeIndex v) const {
        return {parent_targets_.data() + parent_offsets_[v], parent_targets_.data() + parent_offsets_[v + 1]};
    }

    /// Same persons, every edge flipped.
    Polytree reversed() const {
        std::vector<Edge> flipped;
        flipped.reserve(edges_.size());
        for (const Edge& e : edges_) flipped.push_back(Edge{e.child, e.parent});
        return build(persons_, std::move(flipped));
    }

    /// Kahn's algorithm; ties resolved by smallest index first.
    std::vector<NodeIndex> topological_order() const {
        std::vector<std::size_t> indegree(size());
        for (NodeIndex v = 0; v < size(); ++v) indegree[v] = parents(v).size();
        std::vector<NodeIndex> ready;
        for (NodeIndex v = 0; v < size(); ++v)
            if (indegree[v] == 0) ready.push_back(v);
        std::make_heap(ready.begin(), ready.end(), std::greater<>{});
        std::vector<NodeIndex> order;
        order.reserve(size());
        while (!ready.empty()) {
            std::pop_heap(ready.begin(), ready.end(), std::greater<>{});
            NodeIndex v = ready.back();
            ready.pop_back();
            order.push_back(v);
            for (NodeIndex c : children(v)) {
                if (--indegree[c] == 0) {
                    ready.push_back(c);
                    std::push_heap(ready.begin(), ready.end(), std::greater<>{});
                }
            }
        }
        return order;
    }

    friend bool operator==(const Polytree& a, const Polytree& b) {
        return a.persons_ == b.persons_ && a.edges_ == b.edges_;
    }

private:
    static const NodeId& key(const Person& p) { return p.id; }
    static const NodeId& key(const NodeId& id) { return id; }

    void build_adjacency() {
        const std::size_t n = persons_.size();
        child_offsets_.assign(n + 1, 0);
        parent_offsets_.assign(n + 1, 0);
        std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
        pairs.reserve(edges_.size());
        for (const Edge& e : edges_) {
            NodeIndex p = index_.at(e.parent.str());
            NodeIndex c = index_.at(e.child.str());
            pairs.emplace_back(p, c);
            ++child_offsets_[p + 1];
            ++parent_offsets_[c + 1];
        }
        for (std::size_t k = 0; k < n; ++k) {
            child_offsets_[k + 1] += child_offsets_[k];
            parent_offsets_[k + 1] += parent_offsets_[k];
        }
        child_targets_.resize(pairs.size());
        parent_targets_.resize(pairs.size());
        std::vector<std::size_t> cfill(child_offsets_.begin(), child_offsets_.end() - 1);
        std::vector<std::size_t> pfill(parent_offsets_.begin(), parent_offsets_.end() - 1);
        // edges_ is sorted by (parent, child) and indices follow id order, so
        // child lists come out ascending; parent lists are sorted below.
        for (auto [p, c] : pairs) {
            child_targets_[cfill[p]++] = c;
            parent_targets_[pfill[c]++] = p;
        }
        for (std::size_t k = 0; k < n; ++k) {
            std::sort(parent_targets_.begin() + parent_offsets_[k],
                      parent_targets_.begin() + parent_offsets_[k + 1]);
        }
    }

    void check_acyclic() const {
        if (topological_order().size() == size()) return;
        // Every node left outside the order lies on or downstream of a cycle;
        // walking parents from one of them must revisit a node.
        std::vector<std::size_t> indegree(size());
        for (NodeIndex v = 0; v < size(); ++v) indegree[v] = parents(v).size();
        std::vector<NodeIndex> stack;
        for (NodeIndex v = 0; v < size(); ++v)
            if (indegree[v] == 0) stack.push_back(v);
        std::vector<bool> removed(size(), false);
        while (!stack.empty()) {
            NodeIndex v = stack.back();
            stack.pop_back();
            removed[v] = true;
            for (NodeIndex c : children(v))
                if (--indegree[c] == 0) stack.push_back(c);
        }
        // Each residual node keeps a residual parent, so walking parents must revisit a node.
        NodeIndex v = 0;
        while (removed[v]) ++v;
        std::vector<std::size_t> seen_at(size(), SIZE_MAX);
        std::vector<NodeIndex> walk;
        while (seen_at[v] == SIZE_MAX) {
            seen_at[v] = walk.size();
            walk.push_back(v);
            for (NodeIndex p : parents(v)) {
                if (!removed[p]) {
                    v = p;
                    break;
                }
            }
        }
        std::vector<NodeIndex> loop(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
        std::reverse(loop.begin(), loop.end());
        std::rotate(loop.begin(), std::min_element(loop.begin(), loop.end()), loop.end());
        std::vector<std::string> witness;
        for (NodeIndex u : loop) witness.push_back(id(u).str());
        witness.push_back(id(loop.front()).str());
        throw CycleError(std::move(witness));
    }

    std::vector<Person> persons_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<std::size_t> child_offsets_{0};
    std::vector<NodeIndex> child_targets_;
    std::vector<std::size_t> parent_offsets_{0};
    std::vector<NodeIndex> parent_targets_;
};

/// Union by NodeId. A nonempty name beats an empty one; two different
/// nonempty names keep `first`'s and report a warning.
inline Polytree merge(const Polytree& first, const Polytree& second, const WarningSink& warnings = {}) {
    std::map<NodeId, std::string> names;
    for (const Person& p : first.persons()) names.emplace(p.id, p.name);
    for (const Person& p : second.persons()) {
        auto [it, inserted] = names.emplace(p.id, p.name);
        if (inserted || p.name.empty() || it->second == p.name) continue;
        if (it->second.empty()) {
            it->second = p.name;
        } else {
            warn(warnings, "name conflict for '" + p.id.str() + "': keeping '" + it->second +
                               "' over '" + p.name + "'");
        }
    }
    std::vector<Person> persons;
    persons.reserve(names.size());
    for (auto& [id, name] : names) persons.push_back(Person{id, std::move(name)});
    std::vector<Edge> edges(first.edges().begin(), first.edges().end());
    edges.insert(edges.end(), second.edges().begin(), second.edges().end());
    return Polytree::build(std::move(persons), std::move(edges));
}

/// Target set J: a subset of a graph's vertices, kept as ascending indices.
class SelectionMask {
public:
    SelectionMask() = default;

    static SelectionMask all(const Polytree& g) {
        SelectionMask m;
        m.flags_.assign(g.size(), true);
        m.members_.resize(g.size());
        for (NodeIndex v = 0; v < g.size(); ++v) m.members_[v] = v;
        return m;
    }

    /// Throws UnknownNodeError for ids outside the graph. Duplicates are ignored.
    static SelectionMask from_ids(const Polytree& g, std::span<const NodeId> ids) {
        SelectionMask m;
        m.flags_.assign(g.size(), false);
        for (const NodeId& id : ids) m.flags_[g.index_of(id)] = true;
        for (NodeIndex v = 0; v < g.size(); ++v)
            if (m.flags_[v]) m.members_.push_back(v);
        return m;
    }

    static SelectionMask from_flags(std::vector<bool> flags) {
        SelectionMask m;
        m.flags_ = std::move(flags);
        for (NodeIndex v = 0; v < m.flags_.size(); ++v)
            if (m.flags_[v]) m.members_.push_back(v);
        return m;
    }

    bool contains(NodeIndex v) const { return v < flags_.size() && flags_[v]; }
    std::span<const NodeIndex> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    /// Number of vertices of the graph the mask was made for.
    std::size_t universe() const noexcept { return flags_.size(); }

private:
    std::vector<bool> flags_;
    std::vector<NodeIndex> members_;
};

}  // namespace dagcent

template <>
struct std::hash<dagcent::NodeId> {
    std::size_t operator()(const dagcent::NodeId& id) const noexcept {
        return std::hash<std::string>{}(id.str());
    }
};

#endif  // DAGCENT_POLYTREE_HPP_
