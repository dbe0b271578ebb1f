#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratpoly/ehrhart/tuples.hpp"
#include "ratpoly/geometry/counting.hpp"

namespace ratpoly::io {

using Polygon = RationalPolygon<std::int64_t>;

/// One line of a polygon store: denominator, scaled vertices and optional
/// point counts. Counts present in the input are checked against the geometry.
struct PolygonRecord {
    Polygon polygon;
    std::optional<std::int64_t> size, r_size, b1, i1, b2, i2;
};

/// Record with every count filled in.
inline PolygonRecord make_record(const Polygon& p) {
    const auto one = lattice_profile(p, 1);
    const auto two = lattice_profile(p, 2);
    return {p, one.total(), ratpoly::r_size(p), one.boundary, one.interior, two.boundary, two.interior};
}

inline nlohmann::ordered_json to_json(const PolygonRecord& rec) {
    nlohmann::ordered_json j;
    j["r"] = rec.polygon.denominator();
    auto verts = nlohmann::ordered_json::array();
    for (const auto& v : rec.polygon.vertices()) verts.push_back({v.x, v.y});
    j["verts"] = std::move(verts);
    auto put = [&](const char* name, const std::optional<std::int64_t>& v) {
        if (v) j[name] = *v;
    };
    put("size", rec.size);
    put("r_size", rec.r_size);
    put("b1", rec.b1);
    put("i1", rec.i1);
    put("b2", rec.b2);
    put("i2", rec.i2);
    return j;
}

inline std::string serialize(const PolygonRecord& rec) { return to_json(rec).dump(); }

namespace detail {

inline std::int64_t require_int(const nlohmann::json& j, const char* what, std::size_t line) {
    if (!j.is_number_integer()) throw ParseError(line, std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

/// Keeps the given vertex order when it is already the convex position CCW
/// cycle, otherwise normalizes to the hull.
inline Polygon polygon_from(std::int64_t r, std::vector<ScaledPoint<std::int64_t>> pts) {
    auto hull = convex_hull(pts);
    if (hull.size() < 3) throw DegenerateError("polygon is not two-dimensional");
    if (pts.size() == hull.size()) {
        auto it = std::find(pts.begin(), pts.end(), hull.front());
        std::vector<ScaledPoint<std::int64_t>> rotated(it, pts.end());
        rotated.insert(rotated.end(), pts.begin(), it);
        if (rotated == hull) return Polygon::from_hull(r, std::move(pts));
    }
    return Polygon::from_hull(r, std::move(hull));
}

}  // namespace detail

/// Parses one JSON line. `line` is used in error messages only.
inline PolygonRecord parse_record(const std::string& text, std::size_t line = 1) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(line, "record must be a JSON object");
    if (!j.contains("r") || !j.contains("verts")) throw ParseError(line, "record needs \"r\" and \"verts\"");
    const auto r = detail::require_int(j["r"], "r", line);
    if (r < 1) throw ParseError(line, "r must be positive");
    const auto& jv = j["verts"];
    if (!jv.is_array()) throw ParseError(line, "verts must be an array");
    std::vector<ScaledPoint<std::int64_t>> pts;
    for (const auto& v : jv) {
        if (!v.is_array() || v.size() != 2) throw ParseError(line, "each vertex must be a pair");
        pts.push_back({detail::require_int(v[0], "coordinate", line), detail::require_int(v[1], "coordinate", line)});
    }
    if (pts.empty()) throw ParseError(line, "verts is empty");

    auto polygon = [&] {
        try {
            return detail::polygon_from(r, std::move(pts));
        } catch (const DegenerateError& e) {
            throw ParseError(line, e.what());
        }
    }();
    PolygonRecord rec{std::move(polygon), {}, {}, {}, {}, {}, {}};

    const auto full = make_record(rec.polygon);
    auto field = [&](const char* name, std::optional<std::int64_t>& slot, const std::optional<std::int64_t>& truth) {
        if (!j.contains(name)) return;
        slot = detail::require_int(j[name], name, line);
        if (slot != truth)
            throw ParseError(line, std::string(name) + " = " + std::to_string(*slot) + " disagrees with the polygon (" +
                                       std::to_string(*truth) + ")");
    };
    field("size", rec.size, full.size);
    field("r_size", rec.r_size, full.r_size);
    field("b1", rec.b1, full.b1);
    field("i1", rec.i1, full.i1);
    field("b2", rec.b2, full.b2);
    field("i2", rec.i2, full.i2);
    return rec;
}

/// Reads a JSON Lines stream, skipping blank lines.
inline std::vector<PolygonRecord> read_records(std::istream& in) {
    std::vector<PolygonRecord> out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        out.push_back(parse_record(text, line));
    }
    return out;
}

inline void write_records(std::ostream& out, const std::vector<PolygonRecord>& recs) {
    for (const auto& r : recs) out << serialize(r) << '\n';
}

/// `p/q` with q > 0 in lowest terms, or `p` for integers.
template <class Int>
std::string render(const Rational<Int>& q) {
    std::ostringstream os;
    os << q.numerator();
    if (q.denominator() != 1) os << '/' << q.denominator();
    return os.str();
}

}  // namespace ratpoly::io
