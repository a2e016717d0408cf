#ifndef DAGCENT_TESTS_RANDOM_DAG_HPP_
#define DAGCENT_TESTS_RANDOM_DAG_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dagcent/polytree.hpp"

namespace dagcent::testing {

/// Zero-padded ids so lexicographic order matches numeric order.
inline std::string node_name(std::size_t k, std::size_t width = 3) {
    std::string s = std::to_string(k);
    return "n" + std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

/// Draws a uniform random permutation as the topological order, then keeps
/// each forward pair independently with probability `p`. Acyclic by construction.
inline Polytree random_dag(std::mt19937_64& rng, std::size_t nodes, double p) {
    std::vector<std::size_t> order(nodes);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution keep(p);
    std::vector<Person> persons;
    for (std::size_t k = 0; k < nodes; ++k) persons.push_back(Person{NodeId(node_name(k)), "person " + std::to_string(k)});
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < nodes; ++a)
        for (std::size_t b = a + 1; b < nodes; ++b)
            if (keep(rng)) edges.push_back(Edge{NodeId(node_name(order[a])), NodeId(node_name(order[b]))});
    return Polytree::build(std::move(persons), std::move(edges));
}

/// Sparse variant for large graphs: `edge_count` distinct forward pairs drawn uniformly.
inline Polytree random_sparse_dag(std::mt19937_64& rng, std::size_t nodes, std::size_t edge_count) {
    std::vector<std::size_t> order(nodes);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::size_t> pick(0, nodes - 1);
    std::set<std::pair<std::size_t, std::size_t>> chosen;
    while (chosen.size() < edge_count) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        chosen.emplace(a, b);
    }
    std::vector<Person> persons;
    for (std::size_t k = 0; k < nodes; ++k) persons.push_back(Person{NodeId(node_name(k, 5)), {}});
    std::vector<Edge> edges;
    for (auto [a, b] : chosen) edges.push_back(Edge{NodeId(node_name(order[a], 5)), NodeId(node_name(order[b], 5))});
    return Polytree::build(std::move(persons), std::move(edges));
}

/// Random subset of exactly `size` nodes (or all nodes when size >= |V|).
inline SelectionMask random_mask(std::mt19937_64& rng, const Polytree& g, std::size_t size) {
    std::vector<NodeIndex> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<bool> flags(g.size(), false);
    for (std::size_t k = 0; k < std::min(size, all.size()); ++k) flags[all[k]] = true;
    return SelectionMask::from_flags(std::move(flags));
}

inline Polytree make_graph(std::vector<std::pair<std::string, std::string>> edges,
                           std::vector<std::string> isolated = {}) {
    std::vector<Person> persons;
    for (auto& id : isolated) persons.push_back(Person{NodeId(id), {}});
    std::vector<Edge> es;
    for (auto& [p, c] : edges) es.push_back(Edge{NodeId(p), NodeId(c)});
    return Polytree::build(std::move(persons), std::move(es));
}

inline std::vector<NodeId> ids(std::initializer_list<const char*> names) {
    std::vector<NodeId> out;
    for (const char* n : names) out.emplace_back(n);
    return out;
}

}  // namespace dagcent::testing

#endif  // DAGCENT_TESTS_RANDOM_DAG_HPP_
