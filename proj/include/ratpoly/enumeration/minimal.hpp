#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "ratpoly/enumeration/growth.hpp"
#include "ratpoly/geometry/canonical.hpp"
#include "ratpoly/geometry/counting.hpp"

namespace ratpoly {

/// Triples 0 <= a1 <= a2 <= a3 <= r-1 with either a1+a2+a3 = r-1, a1+a2 > 0
/// or a1+a2+a3 = 2r-1, a1+a2 >= r. They index the size-zero minimal triangles.
inline std::vector<std::array<std::int64_t, 3>> size_zero_triples(std::int64_t r) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (std::int64_t a1 = 0; a1 < r; ++a1)
        for (std::int64_t a2 = a1; a2 < r; ++a2)
            for (std::int64_t a3 = a2; a3 < r; ++a3) {
                const auto s = a1 + a2 + a3;
                if ((s == r - 1 && a1 + a2 > 0) || (s == 2 * r - 1 && a1 + a2 >= r)) out.push_back({a1, a2, a3});
            }
    return out;
}

/// (1/r)(Delta + v) with Delta the unit triangle; v given in lattice units.
template <class Int = std::int64_t>
RationalPolygon<Int> shifted_unit_triangle(const std::type_identity_t<Int>& r, const std::type_identity_t<Int>& vx, const std::type_identity_t<Int>& vy) {
    return RationalPolygon<Int>::from_points(r, {{vx, vy}, {vx + 1, vy}, {vx, vy + 1}});
}

/// Minimal size-zero polygons of denominator r, one per triple.
template <class Int = std::int64_t>
std::vector<RationalPolygon<Int>> minimal_size_zero(const std::type_identity_t<Int>& r) {
    std::vector<RationalPolygon<Int>> out;
    for (const auto& t : size_zero_triples(static_cast<std::int64_t>(r)))
        out.push_back(shifted_unit_triangle<Int>(r, Int(t[0]), Int(t[1])));
    return out;
}

/// Independent route: every size-zero (1/r)(Delta + v), v in [0, r-1]^2,
/// deduplicated by canonical key (sorted by key).
template <class Int = std::int64_t>
std::vector<RationalPolygon<Int>> minimal_size_zero_by_scan(const std::type_identity_t<Int>& r) {
    std::map<CanonicalKey<Int>, RationalPolygon<Int>> seen;
    for (Int x = 0; x < r; ++x)
        for (Int y = 0; y < r; ++y) {
            auto t = shifted_unit_triangle<Int>(r, x, y);
            if (size(t) == 0) seen.emplace(canonical_form(t), t);
        }
    std::vector<RationalPolygon<Int>> out;
    for (auto& [k, p] : seen) out.push_back(p);
    return out;
}

/// conv((0,0), (n-2,0), (0,1)): the lattice polygon of size n whose points
/// other than (0,1) are collinear.
template <class Int = std::int64_t>
RationalPolygon<Int> one_row_triangle(const std::type_identity_t<Int>& n) {
    return RationalPolygon<Int>::from_points(Int(1), {{0, 0}, {n - 2, 0}, {0, 1}});
}

/// All lattice polygons with exactly k lattice points up to equivalence,
/// sorted by canonical key. Grown size by size from the unit triangle, adding
/// one lattice point on a facet-adjacent line at a time; the one-row triangle
/// of each size covers the chains that start from a segment.
template <class Int = std::int64_t>
std::vector<RationalPolygon<Int>> lattice_polygons_of_size(const std::type_identity_t<Int>& k) {
    if (k < 3) return {};
    std::map<CanonicalKey<Int>, RationalPolygon<Int>> level;
    auto seed = one_row_triangle<Int>(Int(3));
    level.emplace(canonical_form(seed), seed);
    for (Int s = 3; s < k; ++s) {
        std::map<CanonicalKey<Int>, RationalPolygon<Int>> next;
        for (const auto& [key, p] : level) {
            for (const auto& v : adjacent_candidates(p, LatticePointPolicy::include)) {
                auto q = extend(p, v);
                if (r_size(q) != s + 1) continue;
                next.emplace(canonical_form(q), q);
            }
        }
        auto tri = one_row_triangle<Int>(Int(s + 1));
        next.emplace(canonical_form(tri), tri);
        level.swap(next);
    }
    std::vector<RationalPolygon<Int>> out;
    for (auto& [key, p] : level) out.push_back(key.polygon());
    return out;
}

/// T_{r,k}: conv((0,0), (k-1,0), (0,1/r)) for k >= 2, and
/// conv((0,0), (1/r,0), (0,1/r)) for k = 1.
template <class Int = std::int64_t>
RationalPolygon<Int> rational_seed_triangle(const std::type_identity_t<Int>& r, const std::type_identity_t<Int>& k) {
    if (k < 1) throw DomainError("rational seed triangle needs k >= 1");
    if (k == 1) return RationalPolygon<Int>::from_points(r, {{0, 0}, {1, 0}, {0, 1}});
    return RationalPolygon<Int>::from_points(r, {{0, 0}, {r * (k - 1), 0}, {0, 1}});
}

/// Minimal polygons of denominator r >= 2 and size k.
template <class Int = std::int64_t>
std::vector<RationalPolygon<Int>> minimal_polygons(const std::type_identity_t<Int>& r, const std::type_identity_t<Int>& k) {
    if (r < 2) throw ContractError("minimal_polygons expects r >= 2");
    if (k < 0) throw DomainError("size must be non-negative");
    if (k == 0) return minimal_size_zero<Int>(r);
    if (k == 1) return {rational_seed_triangle<Int>(r, k)};
    std::vector<RationalPolygon<Int>> out;
    for (const auto& q : lattice_polygons_of_size<Int>(k)) out.push_back(q.with_denominator(r));
    out.push_back(rational_seed_triangle<Int>(r, k));
    return out;
}

}  // namespace ratpoly
