#ifndef DAGCENT_VERIFY_HPP_
#define DAGCENT_VERIFY_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "dagcent/centrality.hpp"
#include "dagcent/cross.hpp"
#include "dagcent/io.hpp"
#include "dagcent/oracle.hpp"

namespace dagcent {

inline constexpr double kVerifyRelTol = 1e-12;

/// Equal infinities agree; finite values agree within `rel` of the larger magnitude.
inline bool agrees(long double engine, long double reference, long double rel = kVerifyRelTol) {
    if (std::isinf(engine) || std::isinf(reference)) return engine == reference;
    long double scale = std::max(std::fabs(engine), std::fabs(reference));
    return std::fabs(engine - reference) <= rel * scale;
}

struct VerifyReport {
    std::vector<std::string> lines;
    std::size_t checks = 0;
    std::size_t failures = 0;
    bool ok() const noexcept { return failures == 0; }
};

/// Compares the engine against the brute-force oracle for every exponent,
/// both directions, and every generation degree given.
inline VerifyReport verify_against_oracle(const Polytree& g, const std::optional<SelectionMask>& mask,
                                          const std::vector<double>& exponents, const std::vector<unsigned>& degrees) {
    VerifyReport report;
    std::optional<std::vector<bool>> flags;
    if (mask) {
        flags.emplace(g.size(), false);
        for (NodeIndex v : mask->members()) (*flags)[v] = true;
    }
    for (double h : exponents) {
        for (Direction dir : {Direction::out, Direction::in}) {
            auto engine = holder_centrality(g, HolderParams{h, dir, mask});
            auto reference = oracle::holder(g, h, dir == Direction::out, flags);
            std::size_t bad = 0;
            for (std::size_t v = 0; v < g.size(); ++v) {
                ++report.checks;
                bool same = agrees(engine[v].mean_distance, reference[v].mean_distance) &&
                            agrees(engine[v].closeness, reference[v].closeness);
                if (!same) ++bad;
            }
            report.failures += bad;
            report.lines.push_back(std::string(bad ? "FAIL" : "ok  ") + " centrality h=" + format_real(h) +
                                   " direction=" + (dir == Direction::out ? "out" : "in") + " (" +
                                   std::to_string(bad) + " mismatches)");
        }
    }
    SelectionMask cross_mask = mask ? *mask : SelectionMask::all(g);
    if (!cross_mask.empty()) {
        std::vector<bool> cross_flags(g.size(), false);
        for (NodeIndex v : cross_mask.members()) cross_flags[v] = true;
        for (unsigned n : degrees) {
            auto engine = crossdistance(g, cross_mask, CrossParams{n, 1.0, Orientation::ancestors});
            auto reference = oracle::cross(g, cross_flags, n, true);
            std::size_t bad = 0;
            for (std::size_t a = 0; a < engine.size(); ++a) {
                for (std::size_t b = 0; b < engine.size(); ++b) {
                    ++report.checks;
                    if (static_cast<long double>(engine.at(a, b)) != reference[a][b]) ++bad;
                }
            }
            report.failures += bad;
            report.lines.push_back(std::string(bad ? "FAIL" : "ok  ") + " crossdistance n=" + std::to_string(n) +
                                   " (" + std::to_string(bad) + " mismatches)");
        }
    }
    return report;
}

}  // namespace dagcent

#endif  // DAGCENT_VERIFY_HPP_
