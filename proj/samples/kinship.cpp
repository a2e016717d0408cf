// Prints the horizontal-distance matrix of a few people in a pedigree.
//
//   kinship <graph> <n> <id> <id> [id...]

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <vector>

#include "dagcent/dagcent.hpp"

int main(int argc, char** argv) {
    if (argc < 5) {
        std::fprintf(stderr, "usage: %s <graph> <n> <id> <id> [id...]\n", argv[0]);
        return 2;
    }
    try {
        dagcent::Polytree g = dagcent::load_graph(argv[1]);
        auto n = static_cast<std::uint32_t>(std::strtoul(argv[2], nullptr, 10));
        std::vector<dagcent::NodeId> ids;
        for (int k = 3; k < argc; ++k) ids.emplace_back(argv[k]);
        auto mask = dagcent::SelectionMask::from_ids(g, ids);
        auto m = dagcent::crossdistance(g, mask, dagcent::CrossParams{n});

        std::printf("%-8s", "");
        for (const auto& id : m.nodes) std::printf("%8s", id.str().c_str());
        std::printf("\n");
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::printf("%-8s", m.nodes[i].str().c_str());
            for (std::size_t j = 0; j < m.size(); ++j) std::printf("%8.4g", m.at(i, j));
            std::printf("\n");
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
