#ifndef DAGCENT_IO_HPP_
#define DAGCENT_IO_HPP_

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dagcent/errors.hpp"
#include "dagcent/polytree.hpp"

namespace dagcent {

enum class GraphFormat { csv, json };

/// Picks JSON for a `.json` extension and CSV otherwise.
inline GraphFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".json" ? GraphFormat::json : GraphFormat::csv;
}

/// Companion node table of an edge-list file: `family.csv` -> `family.nodes.csv`.
inline std::filesystem::path node_table_path(const std::filesystem::path& edge_path) {
    std::filesystem::path p = edge_path;
    p.replace_extension();
    p += ".nodes.csv";
    return p;
}

namespace csv {

/// Splits one CSV record. Handles RFC 4180 double-quoted fields on a single line.
inline std::vector<std::string> split_record(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        char c = line[k];
        if (quoted) {
            if (c == '"') {
                if (k + 1 < line.size() && line[k + 1] == '"') {
                    field += '"';
                    ++k;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty() && !was_quoted) {
            quoted = was_quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            was_quoted = false;
        } else {
            field += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_no);
    fields.push_back(std::move(field));
    return fields;
}

inline std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

/// Reads all lines, stripping a UTF-8 BOM and trailing CRs.
inline std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    if (!lines.empty() && lines[0].starts_with("\xEF\xBB\xBF")) lines[0].erase(0, 3);
    return lines;
}

}  // namespace csv

/// Parses an edge-list CSV (header `parent,child`) and an optional node table
/// (header `id,name`).
inline Polytree parse_edge_list(std::istream& edges_in, std::istream* nodes_in = nullptr,
                                const BuildOptions& options = {}) {
    std::vector<Person> persons;
    if (nodes_in) {
        auto lines = csv::read_lines(*nodes_in);
        if (lines.empty() || csv::trim(lines[0]) != "id,name")
            throw ParseError("node table must start with header 'id,name'", 1);
        for (std::size_t k = 1; k < lines.size(); ++k) {
            if (csv::trim(lines[k]).empty()) continue;
            auto fields = csv::split_record(lines[k], k + 1);
            if (fields.size() != 2) throw ParseError("expected 2 fields", k + 1);
            if (fields[0].empty()) throw ParseError("empty node id", k + 1);
            persons.push_back(Person{NodeId(fields[0]), fields[1]});
        }
    }

    auto lines = csv::read_lines(edges_in);
    if (lines.empty() || csv::trim(lines[0]) != "parent,child")
        throw ParseError("edge list must start with header 'parent,child'", 1);
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        if (csv::trim(lines[k]).empty()) continue;
        auto fields = csv::split_record(lines[k], k + 1);
        if (fields.size() != 2) throw ParseError("expected 2 fields", k + 1);
        if (fields[0].empty() || fields[1].empty()) throw ParseError("empty node id", k + 1);
        if (fields[0] == fields[1]) throw SelfLoopError(fields[0], k + 1);
        edges.push_back(Edge{NodeId(fields[0]), NodeId(fields[1])});
    }
    return Polytree::build(std::move(persons), std::move(edges), options);
}

namespace detail {

inline nlohmann::ordered_json canonical_json(const Polytree& g) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const Person& p : g.persons()) {
        nlohmann::ordered_json node;
        node["id"] = p.id.str();
        node["name"] = p.name;
        nodes.push_back(std::move(node));
    }
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.parent.str(), e.child.str()});
    nlohmann::ordered_json doc;
    doc["nodes"] = std::move(nodes);
    doc["edges"] = std::move(edges);
    return doc;
}

}  // namespace detail

/// Compact canonical JSON: nodes and edges sorted by id, newline-terminated.
inline std::string to_canonical_json(const Polytree& g) {
    return detail::canonical_json(g).dump(-1, ' ', false, nlohmann::json::error_handler_t::strict) + "\n";
}

inline Polytree parse_json_graph(std::string_view text, const BuildOptions& options = {}) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), std::nullopt, e.byte);
    }
    try {
        if (!doc.is_object()) throw ParseError("top-level value must be an object");
        std::vector<Person> persons;
        if (doc.contains("nodes")) {
            for (const auto& node : doc.at("nodes")) {
                std::string id = node.at("id").get<std::string>();
                if (id.empty()) throw ParseError("empty node id");
                persons.push_back(Person{NodeId(std::move(id)), node.value("name", std::string{})});
            }
        }
        std::vector<Edge> edges;
        if (doc.contains("edges")) {
            for (const auto& edge : doc.at("edges")) {
                if (!edge.is_array() || edge.size() != 2) throw ParseError("edge must be a [parent, child] pair");
                std::string parent = edge[0].get<std::string>();
                std::string child = edge[1].get<std::string>();
                if (parent.empty() || child.empty()) throw ParseError("empty node id");
                edges.push_back(Edge{NodeId(std::move(parent)), NodeId(std::move(child))});
            }
        }
        return Polytree::build(std::move(persons), std::move(edges), options);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

/// CSV loading also reads the companion node table when it exists.
inline Polytree load_graph(const std::filesystem::path& path, GraphFormat format,
                           const BuildOptions& options = {}) {
    if (format == GraphFormat::json) return parse_json_graph(read_file(path), options);
    std::ifstream edges_in(path);
    if (!edges_in) throw Error("cannot open '" + path.string() + "'");
    auto table = node_table_path(path);
    if (std::filesystem::exists(table)) {
        std::ifstream nodes_in(table);
        return parse_edge_list(edges_in, &nodes_in, options);
    }
    return parse_edge_list(edges_in, nullptr, options);
}

inline Polytree load_graph(const std::filesystem::path& path, const BuildOptions& options = {}) {
    return load_graph(path, format_for_path(path), options);
}

inline std::string to_edge_list_csv(const Polytree& g) {
    std::string out = "parent,child\n";
    for (const Edge& e : g.edges()) out += csv::quote(e.parent.str()) + "," + csv::quote(e.child.str()) + "\n";
    return out;
}

inline std::string to_node_table_csv(const Polytree& g) {
    std::string out = "id,name\n";
    for (const Person& p : g.persons()) out += csv::quote(p.id.str()) + "," + csv::quote(p.name) + "\n";
    return out;
}

/// CSV saving writes the edge list to `path` and every node (isolated ones
/// included) to the companion node table.
inline void save_graph(const Polytree& g, const std::filesystem::path& path, GraphFormat format) {
    if (format == GraphFormat::json) {
        write_file(path, to_canonical_json(g));
        return;
    }
    write_file(path, to_edge_list_csv(g));
    write_file(node_table_path(path), to_node_table_csv(g));
}

/// Mask file: one id per line; `#` starts a comment; blank lines ignored.
inline std::vector<NodeId> parse_mask(std::istream& in) {
    std::vector<NodeId> ids;
    for (std::string& line : csv::read_lines(in)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string id = csv::trim(line);
        if (!id.empty()) ids.emplace_back(std::move(id));
    }
    return ids;
}

inline std::vector<NodeId> load_mask(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return parse_mask(in);
}

/// 12 significant digits; infinities print as `inf`.
inline std::string format_real(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

/// JSON cannot hold infinity, so it is written as the string "inf".
inline nlohmann::ordered_json json_real(double value) {
    if (std::isinf(value) || std::isnan(value)) return format_real(value);
    return std::strtod(format_real(value).c_str(), nullptr);
}

}  // namespace dagcent

#endif  // DAGCENT_IO_HPP_
