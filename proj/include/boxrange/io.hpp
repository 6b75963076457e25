#pragma once

// Frame files: JSON {"worlds": K, "edges": [[w, w'], ...]} or a plain edge
// list (first line K, then one "w w'" pair per line, '#' starts a comment).

#include "boxrange/error.hpp"
#include "boxrange/frame.hpp"
#include "boxrange/valuation.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace boxrange {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::size_t positive_index(const nlohmann::json &node, const std::string &field) {
    if (!node.is_number_integer())
        throw ParseError(field + ": expected an integer", 0, field);
    const auto value = node.get<long long>();
    if (value < 1)
        throw ParseError(field + ": expected a positive integer, got " + std::to_string(value), 0,
                         field);
    return static_cast<std::size_t>(value);
}

inline KripkeFrame frame_from_checked_edges(std::size_t worlds, const std::vector<Edge> &edges,
                                           const std::vector<std::string> &where,
                                           const std::vector<std::size_t> &lines = {}) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto &[a, b] = edges[i];
        if (a > worlds || b > worlds) {
            const std::size_t line = lines.empty() ? 0 : lines[i];
            throw ParseError(where[i] + ": edge (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") has an endpoint outside 1.." + std::to_string(worlds),
                             line, lines.empty() ? where[i] : std::string{});
        }
    }
    return KripkeFrame(worlds, edges);
}

} // namespace detail

/// Accepts a bare frame object or any object carrying one under "frame"
/// (an emitted report, for instance).
inline KripkeFrame frame_from_json(const nlohmann::json &doc) {
    if (!doc.is_object())
        throw ParseError("frame JSON must be an object", 0, "");
    if (doc.contains("frame") && !doc.contains("worlds"))
        return frame_from_json(doc.at("frame"));
    if (!doc.contains("worlds"))
        throw ParseError("worlds: missing field", 0, "worlds");
    if (!doc.contains("edges"))
        throw ParseError("edges: missing field", 0, "edges");
    const std::size_t worlds = detail::positive_index(doc.at("worlds"), "worlds");
    const auto &list = doc.at("edges");
    if (!list.is_array())
        throw ParseError("edges: expected an array", 0, "edges");
    std::vector<Edge> edges;
    std::vector<std::string> where;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        const auto &pair = list[i];
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError(field + ": expected a pair [w, w']", 0, field);
        edges.emplace_back(detail::positive_index(pair[0], field + "[0]"),
                           detail::positive_index(pair[1], field + "[1]"));
        where.push_back(field);
    }
    return detail::frame_from_checked_edges(worlds, edges, where);
}

inline KripkeFrame parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> worlds;
    std::vector<Edge> edges;
    std::vector<std::string> where;
    std::vector<std::size_t> lines;
    auto read_index = [&](std::istringstream &fields, const char *what) -> std::size_t {
        long long value = 0;
        if (!(fields >> value))
            throw ParseError("line " + std::to_string(line_no) + ": expected " + what, line_no, "");
        if (value < 1)
            throw ParseError("line " + std::to_string(line_no) + ": " + what +
                                 " must be positive, got " + std::to_string(value),
                             line_no, "");
        return static_cast<std::size_t>(value);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream fields(raw);
        std::string probe;
        if (!(fields >> probe))
            continue;
        fields.clear();
        fields.seekg(0);
        if (!worlds) {
            worlds = read_index(fields, "world count");
        } else {
            const std::size_t from = read_index(fields, "source world");
            const std::size_t to = read_index(fields, "target world");
            edges.emplace_back(from, to);
            where.push_back("line " + std::to_string(line_no));
            lines.push_back(line_no);
        }
        std::string extra;
        if (fields >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": unexpected token '" + extra +
                                 "'",
                             line_no, "");
    }
    if (!worlds)
        throw ParseError("edge list is empty: expected a world count", line_no, "");
    return detail::frame_from_checked_edges(*worlds, edges, where, lines);
}

/// Dispatches on the first non-blank character: '{' means JSON.
inline KripkeFrame parse_frame(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), 0, "");
        }
        return frame_from_json(doc);
    }
    return parse_edge_list(text);
}

inline KripkeFrame load_frame(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path, 0, "");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_frame(buf.str());
}

inline ordered_json frame_to_json(const KripkeFrame &frame) {
    ordered_json edges = ordered_json::array();
    for (const auto &[a, b] : frame.edges())
        edges.push_back({a, b});
    return ordered_json{{"worlds", frame.world_count()}, {"edges", std::move(edges)}};
}

inline std::string frame_to_edge_list(const KripkeFrame &frame) {
    std::string out = std::to_string(frame.world_count()) + "\n";
    for (const auto &[a, b] : frame.edges())
        out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

inline ordered_json valuation_to_json(const Valuation &v) { return ordered_json(v.to_vector()); }

} // namespace boxrange
