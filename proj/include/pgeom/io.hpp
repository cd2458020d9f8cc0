#pragma once

#include <istream>
#include <string>
#include <vector>

#include "pgeom/cross_ratio.hpp"
#include "pgeom/group.hpp"
#include "pgeom/perspective.hpp"

namespace pgeom {

// Accepts integers, `p/q` rationals, and decimal/scientific literals
// (converted exactly).
Rational parse_rational(const std::string& token);
double parse_double(const std::string& token);

template <class S>
S parse_scalar(const std::string& token);

template <>
inline Rational parse_scalar<Rational>(const std::string& token) {
    return parse_rational(token);
}

template <>
inline double parse_scalar<double>(const std::string& token) {
    return parse_double(token);
}

// "p/q", or just "p" for integers.
std::string format_rational(const Rational& value);

// Shortest-roundtrip-ish decimal with the given significant digits (%g).
std::string format_decimal(double value, int significant = 10);

inline std::string format_scalar(const Rational& value) { return format_rational(value); }
inline std::string format_scalar(double value) { return format_decimal(value); }

// Exact backend: "27/20 (1.35)"; double backend: "1.35"; infinity: "inf".
std::string format_extended(const ExtendedScalar<Rational>& value);
std::string format_extended(const ExtendedScalar<double>& value);

namespace detail {

// Strips '#' comments and splits on whitespace.
std::vector<std::string> tokenize_line(const std::string& line);

[[noreturn]] void parse_fail(const std::string& name, std::size_t lineno, const std::string& what);

}  // namespace detail

// One record of the point-list format: `label x1 .. xk`, or
// `line label u1 u2 u3` for a line of RP^2.
template <class S>
struct PointRecord {
    std::string label;
    bool is_line = false;
    std::vector<S> coords;
};

// Point records must share one arity (2 for RP^1, 3 for RP^2); line records
// are only valid alongside 3-coordinate points.
template <class S>
std::vector<PointRecord<S>> parse_points(std::istream& in, const std::string& name) {
    std::vector<PointRecord<S>> records;
    std::size_t point_arity = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = detail::tokenize_line(line);
        if (tokens.empty()) continue;
        PointRecord<S> rec;
        std::size_t first = 0;
        if (tokens[0] == "line") {
            rec.is_line = true;
            if (tokens.size() < 2) detail::parse_fail(name, lineno, "line record needs a label");
            rec.label = tokens[1];
            first = 2;
        } else {
            rec.label = tokens[0];
            first = 1;
        }
        for (std::size_t i = first; i < tokens.size(); ++i) {
            try {
                rec.coords.push_back(parse_scalar<S>(tokens[i]));
            } catch (const Error&) {
                detail::parse_fail(name, lineno, "bad scalar '" + tokens[i] + "'");
            }
        }
        if (rec.is_line) {
            if (rec.coords.size() != 3)
                detail::parse_fail(name, lineno, "line record needs 3 coordinates");
        } else {
            if (rec.coords.size() != 2 && rec.coords.size() != 3)
                detail::parse_fail(name, lineno, "point record needs 2 or 3 coordinates");
            if (point_arity == 0)
                point_arity = rec.coords.size();
            else if (rec.coords.size() != point_arity)
                detail::parse_fail(name, lineno, "mixed point arities in one file");
        }
        records.push_back(std::move(rec));
    }
    for (const auto& rec : records)
        if (rec.is_line && point_arity == 2)
            fail(Err::Parse, name + ": line records require 3-coordinate points");
    return records;
}

// Three content lines of three scalars each.
template <class S>
Mat<S, 3> parse_matrix3(std::istream& in, const std::string& name) {
    Mat<S, 3> m;
    int row = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = detail::tokenize_line(line);
        if (tokens.empty()) continue;
        if (row >= 3) detail::parse_fail(name, lineno, "matrix has more than three rows");
        if (tokens.size() != 3) detail::parse_fail(name, lineno, "matrix row needs 3 scalars");
        for (int j = 0; j < 3; ++j) {
            try {
                m.a[row][j] = parse_scalar<S>(tokens[static_cast<std::size_t>(j)]);
            } catch (const Error&) {
                detail::parse_fail(name, lineno,
                                   "bad scalar '" + tokens[static_cast<std::size_t>(j)] + "'");
            }
        }
        ++row;
    }
    if (row != 3) fail(Err::Parse, name + ": matrix needs three rows, got " + std::to_string(row));
    return m;
}

// Records: `v x y z`, `e i j` (0-based), `d x y z`, `#` comments.
template <class S>
Scene<S> parse_scene(std::istream& in, const std::string& name) {
    Scene<S> scene;
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::size_t> edge_lines;
    auto scalar_at = [&](const std::vector<std::string>& tokens, std::size_t i) {
        try {
            return parse_scalar<S>(tokens[i]);
        } catch (const Error&) {
            detail::parse_fail(name, lineno, "bad scalar '" + tokens[i] + "'");
        }
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = detail::tokenize_line(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "v") {
            if (tokens.size() != 4) detail::parse_fail(name, lineno, "v record needs 3 scalars");
            scene.vertices.push_back({scalar_at(tokens, 1), scalar_at(tokens, 2), scalar_at(tokens, 3)});
        } else if (tokens[0] == "e") {
            if (tokens.size() != 3) detail::parse_fail(name, lineno, "e record needs 2 indices");
            std::size_t idx[2];
            for (int k = 0; k < 2; ++k) {
                const std::string& t = tokens[static_cast<std::size_t>(k) + 1];
                if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
                    detail::parse_fail(name, lineno, "bad edge index '" + t + "'");
                idx[k] = std::stoull(t);
            }
            scene.edges.emplace_back(idx[0], idx[1]);
            edge_lines.push_back(lineno);
        } else if (tokens[0] == "d") {
            if (tokens.size() != 4) detail::parse_fail(name, lineno, "d record needs 3 scalars");
            scene.marker_directions.push_back(
                {scalar_at(tokens, 1), scalar_at(tokens, 2), scalar_at(tokens, 3)});
        } else {
            detail::parse_fail(name, lineno, "unknown record '" + tokens[0] + "'");
        }
    }
    for (std::size_t i = 0; i < scene.edges.size(); ++i) {
        const auto& [a, b] = scene.edges[i];
        if (a >= scene.vertices.size() || b >= scene.vertices.size())
            detail::parse_fail(name, edge_lines[i], "edge index out of range");
        if (a == b) detail::parse_fail(name, edge_lines[i], "self-loop edge");
    }
    return scene;
}

}  // namespace pgeom
