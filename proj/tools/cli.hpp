#ifndef DAGCENT_TOOLS_CLI_HPP_
#define DAGCENT_TOOLS_CLI_HPP_

// Command-line front end. `run` never lets an exception escape:
// 0 success, 1 validation/input error, 2 usage error.

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dagcent/acquisition.hpp"
#include "dagcent/centrality.hpp"
#include "dagcent/cross.hpp"
#include "dagcent/http_source.hpp"
#include "dagcent/io.hpp"
#include "dagcent/verify.hpp"

namespace dagcent::cli {

enum class OutFormat { csv, json };

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Prefixes load failures with the file name.
inline Polytree load_input(const std::string& path, bool strict) {
    try {
        return load_graph(path, BuildOptions{strict});
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

inline std::optional<SelectionMask> load_targets(const Polytree& g, const std::string& path) {
    if (path.empty()) return std::nullopt;
    auto ids = load_mask(path);
    return SelectionMask::from_ids(g, ids);
}

/// Writes to `--output` or, when empty, to `out`.
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

inline std::string scores_csv(const Polytree& g, const std::vector<CentralityScore>& scores) {
    std::string s = "id,name,mean_distance,closeness\n";
    for (const auto& sc : scores) {
        s += csv::quote(sc.node.str()) + "," + csv::quote(g.person(g.index_of(sc.node)).name) + "," +
             format_real(sc.mean_distance) + "," + format_real(sc.closeness) + "\n";
    }
    return s;
}

inline std::string scores_json(const Polytree& g, const std::vector<CentralityScore>& scores) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& sc : scores) {
        nlohmann::ordered_json r;
        r["id"] = sc.node.str();
        r["name"] = g.person(g.index_of(sc.node)).name;
        r["mean_distance"] = json_real(sc.mean_distance);
        r["closeness"] = json_real(sc.closeness);
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json doc;
    doc["scores"] = std::move(rows);
    return doc.dump() + "\n";
}

inline std::string matrix_csv(const HorizontalMatrix& m) {
    std::string s = "id";
    for (const NodeId& id : m.nodes) s += "," + csv::quote(id.str());
    s += "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += csv::quote(m.nodes[i].str());
        for (std::size_t j = 0; j < m.size(); ++j) s += "," + format_real(m.at(i, j));
        s += "\n";
    }
    return s;
}

inline std::string matrix_json(const HorizontalMatrix& m, Orientation orientation) {
    nlohmann::ordered_json doc;
    doc["n"] = m.n;
    doc["orientation"] = orientation == Orientation::ancestors ? "ancestors" : "descendants";
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const NodeId& id : m.nodes) doc["nodes"].push_back(id.str());
    doc["values"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(json_real(m.at(i, j)));
        doc["values"].push_back(std::move(row));
    }
    return doc.dump() + "\n";
}

inline std::string cross_scores_csv(const Polytree& g, const std::vector<CrossScore>& scores) {
    std::string s = "id,name,crosscloseness\n";
    for (const auto& sc : scores)
        s += csv::quote(sc.node.str()) + "," + csv::quote(g.person(g.index_of(sc.node)).name) + "," +
             format_real(sc.score) + "\n";
    return s;
}

inline std::string cross_scores_json(const Polytree& g, const std::vector<CrossScore>& scores) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& sc : scores) {
        nlohmann::ordered_json r;
        r["id"] = sc.node.str();
        r["name"] = g.person(g.index_of(sc.node)).name;
        r["crosscloseness"] = json_real(sc.score);
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json doc;
    doc["scores"] = std::move(rows);
    return doc.dump() + "\n";
}

/// Graph output: a file in the requested format, or stdout (JSON, or the
/// bare edge list for CSV).
inline void emit_graph(const Polytree& g, const std::string& path, OutFormat format, std::ostream& out) {
    GraphFormat gf = format == OutFormat::json ? GraphFormat::json : GraphFormat::csv;
    if (!path.empty()) {
        save_graph(g, path, gf);
        return;
    }
    out << (gf == GraphFormat::json ? to_canonical_json(g) : to_edge_list_csv(g));
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized-mean closeness and cross-closeness on directed acyclic graphs", "dagcent"};
    // "-h" is taken by the exponent option.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    const std::map<std::string, OutFormat> formats{{"csv", OutFormat::csv}, {"json", OutFormat::json}};
    const std::map<std::string, Direction> directions{{"out", Direction::out}, {"in", Direction::in}};
    const std::map<std::string, Orientation> orientations{{"ancestors", Orientation::ancestors},
                                                          {"descendants", Orientation::descendants}};

    std::string input, output, targets;
    std::vector<std::string> inputs;
    OutFormat format = OutFormat::csv;
    bool format_given = false;
    double h = -1.0;
    Direction direction = Direction::out;
    int degree = 1;
    Orientation orientation = Orientation::ancestors;
    bool strict = false;
    bool cross_scores = false;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
            ->each([&](const std::string&) { format_given = true; });
    };

    // validate
    auto* validate = app.add_subcommand("validate", "Check that a graph file is a valid DAG");
    validate->add_option("--input", input, "Graph file (.csv edge list or .json)")->required();
    validate->add_flag("--strict", strict, "Reject edges whose endpoints are missing from the node table");

    // merge
    auto* merge_cmd = app.add_subcommand("merge", "Merge graphs, removing duplicate nodes and edges");
    merge_cmd->add_option("--input", inputs, "Graph files (repeatable)")->required()->expected(1, -1);
    merge_cmd->add_option("--output", output, "Output path (default: stdout)");
    add_format(merge_cmd);

    // centrality
    auto* centrality = app.add_subcommand("centrality", "Hölder-mean closeness for every node");
    centrality->add_option("--input", input, "Graph file")->required();
    centrality->add_option("--h", h, "Exponent h (nonzero)")->capture_default_str();
    centrality->add_option("--direction", direction, "out: follow parent->child edges; in: reversed")
        ->transform(CLI::CheckedTransformer(directions, CLI::ignore_case));
    centrality->add_option("--targets", targets, "Mask file: one node id per line");
    centrality->add_option("--output", output, "Output path (default: stdout)");
    centrality->add_flag("--strict", strict, "Reject edges whose endpoints are missing from the node table");
    add_format(centrality);

    // cross
    auto* cross_cmd = app.add_subcommand("cross", "Horizontal distance matrix or cross-closeness over a mask");
    cross_cmd->add_option("--input", input, "Graph file")->required();
    cross_cmd->add_option("--targets,--mask", targets, "Mask file (default: all nodes)");
    cross_cmd->add_option("--n", degree, "Generation degree n >= 1")->capture_default_str();
    cross_cmd->add_option("--h", h, "Exponent of the cross-closeness power mean (default 1)");
    cross_cmd->add_option("--orientation", orientation, "Shared ancestors or shared descendants")
        ->transform(CLI::CheckedTransformer(orientations, CLI::ignore_case));
    cross_cmd->add_flag("--scores", cross_scores, "Emit cross-closeness per node instead of the matrix");
    cross_cmd->add_option("--output", output, "Output path (default: stdout)");
    cross_cmd->add_flag("--strict", strict, "Reject edges whose endpoints are missing from the node table");
    add_format(cross_cmd);

    // verify
    auto* verify = app.add_subcommand("verify", "Check the engine against the brute-force oracle");
    verify->add_option("--input", input, "Graph file (at most 200 nodes)")->required();
    verify->add_option("--targets", targets, "Mask file (default: all nodes)");
    verify->add_option("--h", h, "Exponent to check (default: -4, -1 and 1)");
    verify->add_option("--n", degree, "Generation degree to check (default: 1, 2 and 3)");

    // fetch
    FetchConfig config;
    std::string root_pid;
    std::string base_url, cache_dir;
    long long delay_ms = -1;
    int max_depth = 0;
    int timeout_s = 30;
    auto* fetch = app.add_subcommand("fetch", "Build an ancestor or descendant tree from the genealogy site");
    fetch->add_option("pid", root_pid, "Root person id")->required();
    fetch->add_option("--orientation", orientation, "ancestors (default) or descendants")
        ->transform(CLI::CheckedTransformer(orientations, CLI::ignore_case));
    fetch->add_option("--base-url", base_url, "Site base URL, or file://<dir> for recorded pages");
    fetch->add_option("--cache-dir", cache_dir, "Directory for <pid>.html / <pid>.json cache files");
    fetch->add_option("--delay-ms", delay_ms, "Minimum gap between network requests (ms)");
    fetch->add_option("--max-depth", max_depth, "Generations to follow (default: unlimited)");
    fetch->add_option("--timeout", timeout_s, "Request timeout in seconds")->capture_default_str();
    fetch->add_option("--output", output, "Output path (default: stdout)");
    add_format(fetch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    WarningSink to_stderr = [&](const std::string& msg) { err << "warning: " << msg << "\n"; };

    try {
        if (*validate) {
            Polytree g = detail::load_input(input, strict);
            out << "valid: " << g.size() << " nodes, " << g.edge_count() << " edges\n";
            return 0;
        }

        if (*merge_cmd) {
            if (!format_given && !output.empty())
                format = format_for_path(output) == GraphFormat::json ? OutFormat::json : OutFormat::csv;
            else if (!format_given)
                format = OutFormat::json;
            Polytree merged;
            for (const std::string& path : inputs) merged = merge(merged, detail::load_input(path, false), to_stderr);
            detail::emit_graph(merged, output, format, out);
            return 0;
        }

        if (*centrality) {
            if (h == 0.0) throw detail::UsageError("--h must be nonzero");
            Polytree g = detail::load_input(input, strict);
            HolderParams params{h, direction, detail::load_targets(g, targets)};
            auto scores = holder_centrality(g, params, to_stderr);
            rank_scores(scores);
            detail::emit(output,
                         format == OutFormat::json ? detail::scores_json(g, scores) : detail::scores_csv(g, scores),
                         out);
            return 0;
        }

        if (*cross_cmd) {
            if (degree < 1) throw detail::UsageError("--n must be >= 1");
            double cross_h = cross_cmd->count("--h") ? h : 1.0;
            if (cross_h == 0.0) throw detail::UsageError("--h must be nonzero");
            Polytree g = detail::load_input(input, strict);
            SelectionMask mask = targets.empty() ? SelectionMask::all(g) : *detail::load_targets(g, targets);
            CrossParams params{static_cast<std::uint32_t>(degree), cross_h, orientation};
            HorizontalMatrix m = crossdistance(g, mask, params);
            std::string text;
            if (cross_scores) {
                auto scores = crosscloseness(m, cross_h);
                rank_scores(scores);
                text = format == OutFormat::json ? detail::cross_scores_json(g, scores)
                                                 : detail::cross_scores_csv(g, scores);
            } else {
                text = format == OutFormat::json ? detail::matrix_json(m, orientation) : detail::matrix_csv(m);
            }
            detail::emit(output, text, out);
            return 0;
        }

        if (*verify) {
            std::vector<double> exponents{-4.0, -1.0, 1.0};
            std::vector<unsigned> degrees{1, 2, 3};
            if (verify->count("--h")) {
                if (h == 0.0) throw detail::UsageError("--h must be nonzero");
                exponents = {h};
            }
            if (verify->count("--n")) {
                if (degree < 1) throw detail::UsageError("--n must be >= 1");
                degrees = {static_cast<unsigned>(degree)};
            }
            Polytree g = detail::load_input(input, false);
            auto report = verify_against_oracle(g, detail::load_targets(g, targets), exponents, degrees);
            for (const auto& line : report.lines) out << line << "\n";
            out << (report.ok() ? "verified " : "MISMATCH ") << report.checks - report.failures << "/"
                << report.checks << " checks\n";
            return report.ok() ? 0 : 1;
        }

        if (*fetch) {
            config = config.with_environment();
            if (!base_url.empty()) config.base_url = base_url;
            if (!cache_dir.empty()) config.cache_dir = cache_dir;
            if (fetch->count("--delay-ms")) {
                if (delay_ms < 0) throw detail::UsageError("--delay-ms must be >= 0");
                config.delay = std::chrono::milliseconds(delay_ms);
            }
            if (fetch->count("--max-depth")) {
                if (max_depth < 1) throw detail::UsageError("--max-depth must be >= 1");
                config.max_depth = max_depth;
            }
            if (timeout_s <= 0) throw detail::UsageError("--timeout must be > 0");
            config.timeout = std::chrono::seconds(timeout_s);
            if (!format_given)
                format = !output.empty() && format_for_path(output) == GraphFormat::csv ? OutFormat::csv
                                                                                         : OutFormat::json;
            auto source = make_page_source(config);
            SteadyClock clock;
            PersonFetcher fetcher(config, source.get(), clock, to_stderr);
            NodeId root(root_pid);
            Polytree g = orientation == Orientation::ancestors ? build_ancestor_tree(fetcher, root)
                                                               : build_descendant_tree(fetcher, root);
            detail::emit_graph(g, output, format, out);
            err << "fetched " << g.size() << " people (" << fetcher.stats().network_requests << " requests, "
                << fetcher.stats().cache_reads << " cache reads)\n";
            return 0;
        }
    } catch (const detail::UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace dagcent::cli

#endif  // DAGCENT_TOOLS_CLI_HPP_
