#ifndef DAGCENT_PAGE_PARSER_HPP_
#define DAGCENT_PAGE_PARSER_HPP_

// Source adapter for academic-genealogy person pages (academictree.org
// `peopleinfo.php` layout). Everything downstream sees only PersonRecord;
// when the site layout drifts, this file and its fixtures are what change.
//
// Recognized structure:
//   - the person's name is the text of the first <h1> element;
//   - a heading (<h2>..<h4>) whose text starts with "Parents" opens the
//     parent section, one starting with "Children" the child section;
//     a section ends at the next heading of any level;
//   - inside a section, each <a href="...peopleinfo.php?pid=ID..."> is a link.

#include <algorithm>
#include <cstdint>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dagcent/errors.hpp"
#include "dagcent/polytree.hpp"

namespace dagcent {

struct PersonRecord {
    NodeId id;
    std::string name;
    std::vector<NodeId> parent_ids;  // source order
    std::vector<NodeId> child_ids;   // source order

    friend bool operator==(const PersonRecord&, const PersonRecord&) = default;
};

class PageParseError : public ParseError {
public:
    PageParseError(const std::string& pid, const std::string& reason)
        : ParseError("page for '" + pid + "': " + reason), pid_(pid) {}

    const std::string& pid() const noexcept { return pid_; }

private:
    std::string pid_;
};

inline nlohmann::ordered_json to_json(const PersonRecord& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id.str();
    j["name"] = r.name;
    j["parents"] = nlohmann::ordered_json::array();
    for (const NodeId& p : r.parent_ids) j["parents"].push_back(p.str());
    j["children"] = nlohmann::ordered_json::array();
    for (const NodeId& c : r.child_ids) j["children"].push_back(c.str());
    return j;
}

inline PersonRecord person_record_from_json(std::string_view text) {
    try {
        auto j = nlohmann::json::parse(text);
        PersonRecord r{NodeId(j.at("id").get<std::string>()), j.value("name", std::string{}), {}, {}};
        for (const auto& p : j.at("parents")) r.parent_ids.emplace_back(p.get<std::string>());
        for (const auto& c : j.at("children")) r.child_ids.emplace_back(c.get<std::string>());
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("person record: ") + e.what());
    }
}

namespace html {

inline void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x110000) {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

/// Decodes numeric references and a handful of named entities common in names.
inline std::string decode_entities(std::string_view s) {
    static const std::pair<std::string_view, std::uint32_t> named[] = {
        {"amp", '&'},    {"lt", '<'},     {"gt", '>'},     {"quot", '"'},   {"apos", '\''},
        {"nbsp", 0xA0},  {"auml", 0xE4},  {"ouml", 0xF6},  {"uuml", 0xFC},  {"Auml", 0xC4},
        {"Ouml", 0xD6},  {"Uuml", 0xDC},  {"szlig", 0xDF}, {"eacute", 0xE9}, {"egrave", 0xE8},
        {"aacute", 0xE1}, {"oacute", 0xF3}, {"iacute", 0xED}, {"ccedil", 0xE7}, {"ntilde", 0xF1},
    };
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] != '&') {
            out += s[k];
            continue;
        }
        auto semi = s.find(';', k);
        if (semi == std::string_view::npos || semi - k > 10) {
            out += s[k];
            continue;
        }
        std::string_view ent = s.substr(k + 1, semi - k - 1);
        bool done = false;
        if (ent.size() > 1 && ent[0] == '#') {
            try {
                std::uint32_t cp = (ent[1] == 'x' || ent[1] == 'X')
                                       ? static_cast<std::uint32_t>(std::stoul(std::string(ent.substr(2)), nullptr, 16))
                                       : static_cast<std::uint32_t>(std::stoul(std::string(ent.substr(1))));
                append_utf8(out, cp);
                done = true;
            } catch (const std::exception&) {
            }
        } else {
            for (auto [name, cp] : named) {
                if (name == ent) {
                    append_utf8(out, cp);
                    done = true;
                    break;
                }
            }
        }
        if (done)
            k = semi;
        else
            out += s[k];
    }
    return out;
}

/// Removes tags, decodes entities, collapses whitespace.
inline std::string text_of(std::string_view fragment) {
    std::string raw;
    bool in_tag = false;
    for (char c : fragment) {
        if (c == '<')
            in_tag = true;
        else if (c == '>')
            in_tag = false;
        else if (!in_tag)
            raw += c;
    }
    std::string decoded = decode_entities(raw);
    std::string out;
    bool space = false;
    for (char c : decoded) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            space = !out.empty();
        } else {
            if (space) out += ' ';
            space = false;
            out += c;
        }
    }
    return out;
}

}  // namespace html

/// Parses one person page. Self-references and repeated links are dropped;
/// self-references are reported through `warnings`.
inline PersonRecord parse_person_page(const NodeId& pid, std::string_view page, const WarningSink& warnings = {}) {
    const std::string text(page);
    static const std::regex h1(R"(<h1[^>]*>([\s\S]*?)</h1>)", std::regex::icase);
    static const std::regex heading(R"(<h([1-6])[^>]*>([\s\S]*?)</h\1>)", std::regex::icase);
    static const std::regex link(R"(<a\s[^>]*href\s*=\s*["'][^"']*peopleinfo\.php\?(?:[^"']*&(?:amp;)?)?pid=([A-Za-z0-9_.-]+)[^"']*["'][^>]*>)",
                                 std::regex::icase);

    std::smatch m;
    if (!std::regex_search(text, m, h1)) throw PageParseError(pid.str(), "no <h1> name heading");
    PersonRecord record{pid, html::text_of(m[1].str()), {}, {}};
    if (record.name.empty()) throw PageParseError(pid.str(), "empty name heading");

    struct Section {
        std::size_t begin;
        std::size_t end;
        std::vector<NodeId>* target;
    };
    std::vector<std::pair<std::size_t, std::size_t>> headings;  // (start of tag, end of tag)
    std::vector<std::string> heading_text;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), heading); it != std::sregex_iterator(); ++it) {
        headings.emplace_back(static_cast<std::size_t>(it->position(0)),
                              static_cast<std::size_t>(it->position(0) + it->length(0)));
        heading_text.push_back(html::text_of((*it)[2].str()));
    }
    std::vector<Section> sections;
    for (std::size_t k = 0; k < headings.size(); ++k) {
        std::vector<NodeId>* target = nullptr;
        if (heading_text[k].starts_with("Parents"))
            target = &record.parent_ids;
        else if (heading_text[k].starts_with("Children"))
            target = &record.child_ids;
        if (!target) continue;
        std::size_t end = k + 1 < headings.size() ? headings[k + 1].first : text.size();
        sections.push_back(Section{headings[k].second, end, target});
    }

    for (const Section& s : sections) {
        auto first = text.begin() + static_cast<std::ptrdiff_t>(s.begin);
        auto last = text.begin() + static_cast<std::ptrdiff_t>(s.end);
        for (auto it = std::sregex_iterator(first, last, link); it != std::sregex_iterator(); ++it) {
            NodeId linked((*it)[1].str());
            if (linked == pid) {
                warn(warnings, "page for '" + pid.str() + "' links to itself; link dropped");
                continue;
            }
            if (std::find(s.target->begin(), s.target->end(), linked) == s.target->end())
                s.target->push_back(std::move(linked));
        }
    }
    return record;
}

}  // namespace dagcent

#endif  // DAGCENT_PAGE_PARSER_HPP_
