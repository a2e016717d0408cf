// Ranks every person in a genealogy graph by harmonic proximity to a set of
// distinguished people (e.g. prize winners) and prints the top entries.
//
//   nobel_proximity <graph.csv|graph.json> <mask.txt> [top]

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "dagcent/dagcent.hpp"

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <graph> <mask> [top]\n", argv[0]);
        return 2;
    }
    try {
        dagcent::Polytree g = dagcent::load_graph(argv[1]);
        auto ids = dagcent::load_mask(argv[2]);
        auto mask = dagcent::SelectionMask::from_ids(g, ids);
        std::size_t top = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 10;

        // Ancestors of laureates score highly under out-direction (they reach them).
        auto scores = dagcent::harmonic_nobelity(g, mask, dagcent::Direction::out);
        dagcent::rank_scores(scores);
        for (std::size_t k = 0; k < scores.size() && k < top; ++k) {
            const auto& s = scores[k];
            const auto& name = g.person(g.index_of(s.node)).name;
            std::printf("%2zu  %-12s %-24s %s\n", k + 1, s.node.str().c_str(), name.c_str(),
                        dagcent::format_real(s.closeness).c_str());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
