#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "ratpoly/geometry/canonical.hpp"
#include "ratpoly/geometry/counting.hpp"
#include "ratpoly/geometry/penumbra.hpp"
#include "ratpoly/geometry/polygon.hpp"
#include "ratpoly/geometry/width.hpp"

namespace ratpoly {

/// True iff P fits in an integral slab c <= u.P <= c + 1 for some primitive u,
/// i.e. P is equivalent to a subset of the strip [0, 1] x R. Defined for r >= 2.
template <class Int>
bool is_infinitely_growable(const RationalPolygon<Int>& p) {
    const Int& r = p.denominator();
    if (r < 2) throw ContractError("infinite growability is only defined for denominator r >= 2");
    for (const auto& u : dual_vectors_within(p, r)) {
        auto [lo, hi] = dual_range(p, u);
        if (hi <= r * floor_div(lo, r) + r) return true;
    }
    return false;
}

enum class LatticePointPolicy { exclude, include };

/// The facet line u.z = h of rP through edge i, in the frame where the edge
/// runs from (0, 0) to (length, 0) and the polygon lies at sigma <= 0.
template <class Int>
struct FacetFrame {
    ScaledPoint<Int> origin;     // first endpoint a
    ScaledPoint<Int> step;       // primitive edge direction
    ScaledPoint<Int> offset;     // w with u.w = 1: one step outward
    DualVector<Int> normal;      // primitive outward normal u
    Int length{0};               // lattice length of the edge

    /// Coordinates (tau, sigma) with z = a + tau*step + sigma*offset.
    std::pair<Int, Int> coords(const ScaledPoint<Int>& z) const {
        auto d = z - origin;
        return {-(d.x * offset.y - d.y * offset.x), dot(normal, d)};
    }

    ScaledPoint<Int> point(const Int& tau, const Int& sigma) const {
        return {origin.x + tau * step.x + sigma * offset.x, origin.y + tau * step.y + sigma * offset.y};
    }
};

template <class Int>
FacetFrame<Int> facet_frame(const RationalPolygon<Int>& p, std::size_t edge) {
    const auto& a = p.vertex(edge);
    const auto& b = p.vertex(edge + 1);
    auto d = b - a;
    const Int g = gcd(d.x, d.y);
    ScaledPoint<Int> step{d.x / g, d.y / g};
    DualVector<Int> u{step.y, -step.x};
    auto [wx, wy] = bezout(u.a, u.b);
    return {a, step, ScaledPoint<Int>{wx, wy}, u, g};
}

/// Points on the line adjacent to facet `edge` (one (1/r)-step outward) that
/// avoid the penumbras of the two nearest outside (1/r)-points x1, x2 of the
/// facet line. Returned in increasing position along the edge direction.
template <class Int>
std::vector<ScaledPoint<Int>> facet_candidates(const RationalPolygon<Int>& p, std::size_t edge,
                                               LatticePointPolicy policy = LatticePointPolicy::exclude,
                                               bool verify = true) {
    const auto f = facet_frame(p, edge);
    const Int& len = f.length;
    // pen(P, x1) meets sigma = 1 in tau >= t1, pen(P, x2) in tau <= t2;
    // keep t2 < tau < t1, computed exactly per vertex with sigma < 0
    std::optional<Int> lo, hi;
    for (const auto& q : p.vertices()) {
        auto [tau, sigma] = f.coords(q);
        if (sigma >= 0) continue;
        const Int s = -sigma;
        Int h = len + ceil_div(Int(len + 1 - tau), s);
        Int l = floor_div(Int(-1 - tau), s);
        if (!hi || h < *hi) hi = h;
        if (!lo || *lo < l) lo = l;
    }
    std::vector<ScaledPoint<Int>> out;
    if (!lo || !hi) return out;
    const Int& r = p.denominator();
    const auto x1 = f.point(len + 1, 0);
    const auto x2 = f.point(Int(-1), 0);
    for (Int t = *lo; t <= *hi; ++t) {
        auto v = f.point(t, 1);
        if (policy == LatticePointPolicy::exclude && v.x % r == 0 && v.y % r == 0) continue;
        if (verify && (in_penumbra(p, x1, v) || in_penumbra(p, x2, v)))
            throw std::logic_error("penumbra range disagrees with the hull test");
        out.push_back(v);
    }
    return out;
}

/// All growth candidates over every facet, sorted and deduplicated.
template <class Int>
std::vector<ScaledPoint<Int>> adjacent_candidates(const RationalPolygon<Int>& p, LatticePointPolicy policy,
                                                  bool verify = true) {
    std::vector<ScaledPoint<Int>> out;
    for (std::size_t e = 0; e < p.vertex_count(); ++e) {
        auto c = facet_candidates(p, e, policy, verify);
        out.insert(out.end(), c.begin(), c.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Non-lattice growth candidates of P.
template <class Int>
std::vector<ScaledPoint<Int>> grow_candidates(const RationalPolygon<Int>& p) {
    return adjacent_candidates(p, LatticePointPolicy::exclude);
}

/// Collinear threshold r(r - h + 1)(k + 1) for the scaled line u.z = c,
/// or nullopt when c/r is integral (the bound does not apply).
template <class Int = std::int64_t>
std::optional<Int> collinear_threshold(const std::type_identity_t<Int>& r, const std::type_identity_t<Int>& c,
                                       const std::type_identity_t<Int>& k) {
    const Int m = mod_floor(c, r);
    if (m == 0) return std::nullopt;
    const Int h = std::min(m, Int(r - m));
    return r * (r - h + 1) * (k + 1);
}

namespace detail {

/// Primitive directions from `from` to each other point, sign-normalized,
/// with multiplicity (points per line through `from`), sorted.
template <class Int>
std::vector<std::pair<ScaledPoint<Int>, Int>> lines_through(const ScaledPoint<Int>& from,
                                                            const std::vector<ScaledPoint<Int>>& pts) {
    std::vector<ScaledPoint<Int>> dirs;
    dirs.reserve(pts.size());
    for (const auto& q : pts) {
        if (q == from) continue;
        auto d = q - from;
        Int g = gcd(d.x, d.y);
        d = {d.x / g, d.y / g};
        if (d.x < 0 || (d.x == 0 && d.y < 0)) d = {-d.x, -d.y};
        dirs.push_back(d);
    }
    std::sort(dirs.begin(), dirs.end());
    std::vector<std::pair<ScaledPoint<Int>, Int>> out;
    for (std::size_t i = 0; i < dirs.size();) {
        std::size_t j = i;
        while (j < dirs.size() && dirs[j] == dirs[i]) ++j;
        out.push_back({dirs[i], Int(j - i + 1)});  // +1 for `from`
        i = j;
    }
    return out;
}

/// Whether some non-integral line through `from` holds at least the threshold
/// number of (1/r)-points (or more than `cap`).
template <class Int>
bool violates_through(const ScaledPoint<Int>& from, const std::vector<ScaledPoint<Int>>& pts, const Int& r,
                      const Int& k, const std::optional<Int>& cap) {
    for (const auto& [d, count] : lines_through(from, pts)) {
        const Int c = d.y * from.x - d.x * from.y;
        auto threshold = collinear_threshold<Int>(r, c, k);
        if (!threshold) continue;
        if (count >= *threshold) return true;
        if (cap && count > *cap) return true;
    }
    return false;
}

}  // namespace detail

/// False iff some line u.x = h~ with primitive u and non-integral h~ in (1/r)Z
/// contains at least r(r - h + 1)(k + 1) points of P n (1/r)Z^2. With `cap`,
/// also false when such a line holds more than cap points.
template <class Int>
bool collinear_bound_ok(const RationalPolygon<Int>& p, const std::type_identity_t<Int>& k,
                        const std::optional<std::type_identity_t<Int>>& cap = std::nullopt) {
    const auto pts = scaled_points(p);
    for (const auto& v : pts)
        if (detail::violates_through(v, pts, p.denominator(), k, cap)) return false;
    return true;
}

/// Filters applied to every grown polygon.
template <class Int = std::int64_t>
struct GrowthRules {
    Int size{0};                   // required |Q n Z^2|
    bool discard_interior{false};  // drop polygons with interior lattice points
    std::optional<Int> collinear_cap;
    bool verify_candidates{true};
};

template <class Int = std::int64_t>
struct GrownPolygon {
    CanonicalKey<Int> key;
    RationalPolygon<Int> polygon;
    bool infinitely_growable{false};
};

template <class Int = std::int64_t>
struct GrowResult {
    std::vector<GrownPolygon<Int>> inf;
    std::vector<GrownPolygon<Int>> fin;
};

/// One growth step: every conv(P, v) over the candidates of P that keeps the
/// size, adds exactly one (1/r)-point and passes the collinear bound, split by
/// infinite growability (skipped when the parent is already finitely
/// growable). Each output list is sorted by key and deduplicated.
template <class Int>
GrowResult<Int> grow_step(const RationalPolygon<Int>& p, const GrowthRules<Int>& rules, bool parent_finite) {
    const Int& r = p.denominator();
    const Int next_r_size = r_size(p) + 1;
    const Int min_threshold = r * (r - r / 2 + 1) * (rules.size + 1);
    GrowResult<Int> out;
    for (const auto& v : adjacent_candidates(p, LatticePointPolicy::exclude, rules.verify_candidates)) {
        auto q = extend(p, v);
        if (r_size(q) != next_r_size) continue;
        if (size(q) != rules.size) continue;
        if (rules.discard_interior && dilation_count(q, Int(1), true) != 0) continue;
        const bool capped = rules.collinear_cap && next_r_size > *rules.collinear_cap;
        if (capped || next_r_size >= min_threshold) {
            if (detail::violates_through(v, scaled_points(q), r, rules.size, rules.collinear_cap)) continue;
        }
        const bool inf = !parent_finite && is_infinitely_growable(q);
        auto key = canonical_form(q);
        (inf ? out.inf : out.fin).push_back({std::move(key), std::move(q), inf});
    }
    for (auto* list : {&out.inf, &out.fin}) {
        std::sort(list->begin(), list->end(), [](const auto& a, const auto& b) { return a.key < b.key; });
        list->erase(std::unique(list->begin(), list->end(), [](const auto& a, const auto& b) { return a.key == b.key; }),
                    list->end());
    }
    return out;
}

/// Convenience overload with the plain Algorithm rules (size k only).
template <class Int>
GrowResult<Int> grow_step(const RationalPolygon<Int>& p, const std::type_identity_t<Int>& k) {
    GrowthRules<Int> rules;
    rules.size = k;
    return grow_step(p, rules, false);
}

}  // namespace ratpoly
