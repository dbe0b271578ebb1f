#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "ratpoly/geometry/polygon.hpp"

namespace ratpoly {

template <class Int = std::int64_t>
struct WidthResult {
    Rational<Int> width;
    DualVector<Int> direction;
};

/// Range [min u.rP, max u.rP] of a dual vector over the scaled vertices.
template <class Int>
std::pair<Int, Int> dual_range(const RationalPolygon<Int>& p, const DualVector<Int>& u) {
    Int lo = dot(u, p.vertex(0)), hi = lo;
    for (const auto& v : p.vertices()) {
        Int t = dot(u, v);
        if (t < lo) lo = t;
        if (hi < t) hi = t;
    }
    return {lo, hi};
}

/// Integer width of rP along u; the width of P is this divided by r.
template <class Int>
Int scaled_width_along(const RationalPolygon<Int>& p, const DualVector<Int>& u) {
    auto [lo, hi] = dual_range(p, u);
    return hi - lo;
}

template <class Int>
Rational<Int> width_along(const RationalPolygon<Int>& p, const DualVector<Int>& u) {
    if (u.a == 0 && u.b == 0) throw DomainError("zero dual vector");
    return Rational<Int>(scaled_width_along(p, u), p.denominator());
}

namespace detail {

/// Sign-normalized dual vector: first nonzero coordinate positive.
template <class Int>
DualVector<Int> normalize_sign(DualVector<Int> u) {
    if (u.a < 0 || (u.a == 0 && u.b < 0)) u = {-u.a, -u.b};
    return u;
}

/// Tie-break order on dual vectors: (|a|, |b|, a, b).
template <class Int>
bool dual_less(const DualVector<Int>& l, const DualVector<Int>& r) {
    const Int la = abs_value(l.a), lb = abs_value(l.b), ra = abs_value(r.a), rb = abs_value(r.b);
    if (la != ra) return la < ra;
    if (lb != rb) return lb < rb;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
}

/// Two linearly independent edge vectors of rP.
template <class Int>
std::pair<ScaledPoint<Int>, ScaledPoint<Int>> independent_edges(const RationalPolygon<Int>& p) {
    auto z1 = p.vertex(1) - p.vertex(0);
    for (std::size_t i = 1; i < p.vertex_count(); ++i) {
        auto z2 = p.vertex(i + 1) - p.vertex(i);
        if (cross(z1, z2) != 0) return {z1, z2};
    }
    throw DegenerateError("polygon has no two independent edges");
}

}  // namespace detail

/// Every primitive dual vector u (one of each +-u pair, sign-normalized)
/// with scaled width of rP along u at most `bound`.
///
/// Any such u satisfies |u.z1| <= bound and |u.z2| <= bound for two
/// independent edge vectors z1, z2, so u ranges over a bounded parallelogram.
template <class Int>
std::vector<DualVector<Int>> dual_vectors_within(const RationalPolygon<Int>& p, const std::type_identity_t<Int>& bound) {
    auto [z1, z2] = detail::independent_edges(p);
    const Int det = cross(z1, z2);
    std::vector<DualVector<Int>> out;
    for (Int s1 = 0; s1 <= bound; ++s1) {
        for (Int s2 = (s1 == 0 ? Int(1) : Int(-bound)); s2 <= bound; ++s2) {
            // u . z1 = s1, u . z2 = s2
            Int na = s1 * z2.y - s2 * z1.y;
            Int nb = s2 * z1.x - s1 * z2.x;
            if (na % det != 0 || nb % det != 0) continue;
            DualVector<Int> u{na / det, nb / det};
            if (gcd(u.a, u.b) != 1) continue;
            if (scaled_width_along(p, u) <= bound) out.push_back(detail::normalize_sign(u));
        }
    }
    return out;
}

namespace detail {

template <class Int>
WidthResult<Int> minimize_width(const RationalPolygon<Int>& p, const std::optional<DualVector<Int>>& exclude) {
    const std::vector<DualVector<Int>> seeds{{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    auto independent = [&](const DualVector<Int>& u) {
        return !exclude || u.a * exclude->b - u.b * exclude->a != 0;
    };
    std::optional<Int> best;
    for (const auto& u : seeds) {
        if (!independent(u)) continue;
        Int w = scaled_width_along(p, u);
        if (!best || w < *best) best = w;
    }
    std::optional<DualVector<Int>> arg;
    Int best_w = *best;
    for (const auto& u : dual_vectors_within(p, *best)) {
        if (!independent(u)) continue;
        Int w = scaled_width_along(p, u);
        if (!arg || w < best_w || (w == best_w && dual_less(u, *arg))) {
            best_w = w;
            arg = u;
        }
    }
    return {Rational<Int>(best_w, p.denominator()), *arg};
}

}  // namespace detail

/// First width of P and a realizing primitive direction.
template <class Int>
WidthResult<Int> width(const RationalPolygon<Int>& p) {
    return detail::minimize_width(p, std::optional<DualVector<Int>>{});
}

/// Minimum width over primitive directions independent of the first-width direction.
template <class Int>
WidthResult<Int> second_width(const RationalPolygon<Int>& p) {
    return detail::minimize_width(p, std::optional<DualVector<Int>>{width(p).direction});
}

}  // namespace ratpoly
