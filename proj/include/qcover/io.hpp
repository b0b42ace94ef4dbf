#pragma once

// Plain-text polygon documents: one decimal pair per line or a bracketed
// list, optional name, comments with '#'. Values round-trip bit-exactly
// through 17 significant digits.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcover/geometry.hpp"

namespace qcover {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolygonDocument {
    std::optional<std::string> name;
    std::vector<Point2> vertices;

    // Enforces counterclockwise order, reordering if needed.
    ConvexPolygon to_polygon() const {
        if (vertices.size() < 3)
            throw parse_error("polygon document needs at least 3 vertices");
        double signed_area = 0.0;
        for (size_t i = 0; i < vertices.size(); ++i)
            signed_area += wedge(vertices[i], vertices[(i + 1) % vertices.size()]);
        std::vector<Point2> vs = vertices;
        if (signed_area < 0.0) std::reverse(vs.begin(), vs.end());
        try {
            return ConvexPolygon(vs);
        } catch (const geometry_error& e) {
            throw parse_error(std::string("vertices: ") + e.what());
        }
    }
};

namespace detail {

inline double parse_number(const std::string& token, const std::string& where) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error(where + ": not a number: '" + token + "'");
    return value;
}

// Splits "[[x1, y1], [x2, y2], ...]" into flat numeric tokens.
inline std::vector<std::string> bracket_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        if (std::isdigit((unsigned char)ch) || ch == '.' || ch == '-' || ch == '+' ||
            ch == 'e' || ch == 'E') {
            current.push_back(ch);
        } else {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
            if (ch != '[' && ch != ']' && ch != ',' && !std::isspace((unsigned char)ch))
                throw parse_error(std::string("vertices: unexpected character '") + ch +
                                  "' in bracketed list");
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

}  // namespace detail

inline PolygonDocument parse_polygon_document(const std::string& text) {
    PolygonDocument doc;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        size_t last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);
        std::string where = "line " + std::to_string(lineno);

        if (body.rfind("name:", 0) == 0) {
            std::string value = body.substr(5);
            size_t vs = value.find_first_not_of(" \t");
            if (vs == std::string::npos) throw parse_error(where + ": name: empty value");
            doc.name = value.substr(vs);
            continue;
        }
        std::vector<std::string> tokens;
        if (body.front() == '[') {
            tokens = detail::bracket_tokens(body);
        } else {
            std::string normalized = body;
            for (char& ch : normalized)
                if (ch == ',') ch = ' ';
            std::istringstream ls(normalized);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
        }
        if (tokens.size() % 2 != 0)
            throw parse_error(where + ": vertices: odd number of coordinates");
        for (size_t i = 0; i < tokens.size(); i += 2)
            doc.vertices.push_back({detail::parse_number(tokens[i], where + ": x"),
                                    detail::parse_number(tokens[i + 1], where + ": y")});
    }
    if (doc.vertices.empty()) throw parse_error("vertices: document has no vertices");
    return doc;
}

inline std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string write_polygon_document(const PolygonDocument& doc) {
    std::string out;
    if (doc.name) out += "name: " + *doc.name + "\n";
    for (const auto& v : doc.vertices)
        out += format_full(v.x) + " " + format_full(v.y) + "\n";
    return out;
}

inline PolygonDocument read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_polygon_document(buffer.str());
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

}  // namespace qcover
