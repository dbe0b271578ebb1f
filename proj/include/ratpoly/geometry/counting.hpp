#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ratpoly/geometry/polygon.hpp"

namespace ratpoly {

/// Exact point counts of a rational polygon. size = |P n Z^2| splits into
/// boundary + interior; r_size = |P n (1/r)Z^2|.
template <class Int = std::int64_t>
struct PointProfile {
    Int size{0};
    Int r_size{0};
    Int boundary{0};
    Int interior{0};

    friend bool operator==(const PointProfile&, const PointProfile&) = default;
};

/// Boundary and interior lattice point counts of a dilation nP.
template <class Int = std::int64_t>
struct LatticeProfile {
    Int boundary{0};
    Int interior{0};

    Int total() const { return boundary + interior; }
    friend bool operator==(const LatticeProfile&, const LatticeProfile&) = default;
};

namespace detail {

/// Visits every column x = step*i meeting the polygon with the inclusive range
/// [lo, hi] of j such that (step*i, step*j) lies in the polygon (or its
/// interior when `strict`). Callback: fn(i, lo, hi), only for nonempty ranges.
template <class Int, class Fn>
void scan_columns(std::span<const ScaledPoint<Int>> v, const Int& step, bool strict, Fn&& fn) {
    const std::size_t n = v.size();
    Int xmin = v[0].x, xmax = v[0].x;
    for (const auto& p : v) {
        if (p.x < xmin) xmin = p.x;
        if (xmax < p.x) xmax = p.x;
    }
    const Int i_begin = ceil_div(xmin, step);
    const Int i_end = floor_div(xmax, step);
    for (Int i = i_begin; i <= i_end; ++i) {
        const Int x = step * i;
        Int lo = 0, hi = -1;
        bool have_lo = false, have_hi = false, empty = false;
        for (std::size_t e = 0; e < n && !empty; ++e) {
            const auto& a = v[e];
            const auto& b = v[(e + 1) % n];
            const Int dx = b.x - a.x;
            const Int dy = b.y - a.y;
            // dx * (y - a.y) - dy * (x - a.x) >= 0 (> 0 when strict), y = step * j
            const Int c = dx * a.y + dy * (x - a.x);
            if (dx == 0) {
                if (strict ? !(0 > c) : !(0 >= c)) empty = true;
                continue;
            }
            const Int coef = dx * step;
            if (coef > 0) {
                Int bound = strict ? Int(floor_div(c, coef) + 1) : ceil_div(c, coef);
                if (!have_lo || lo < bound) lo = bound, have_lo = true;
            } else {
                Int bound = strict ? Int(ceil_div(c, coef) - 1) : floor_div(c, coef);
                if (!have_hi || bound < hi) hi = bound, have_hi = true;
            }
        }
        if (empty || !have_lo || !have_hi || hi < lo) continue;
        fn(i, lo, hi);
    }
}

template <class Int>
Int count_grid_points(std::span<const ScaledPoint<Int>> v, const Int& step, bool strict) {
    Int total = 0;
    scan_columns<Int>(v, step, strict, [&](const Int&, const Int& lo, const Int& hi) { total += hi - lo + 1; });
    return total;
}

template <class Int>
std::vector<ScaledPoint<Int>> dilate(std::span<const ScaledPoint<Int>> v, const Int& n) {
    std::vector<ScaledPoint<Int>> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(n * p);
    return out;
}

}  // namespace detail

/// |P n (1/r)Z^2|, by Pick's theorem on rP.
template <class Int>
Int r_size(const RationalPolygon<Int>& p) {
    const Int a2 = twice_area(p.vertices());
    const Int b = boundary_point_count(p.vertices());
    const Int interior = (a2 - b + 2) / 2;
    return interior + b;
}

/// |P n Z^2|.
template <class Int>
Int size(const RationalPolygon<Int>& p) {
    return detail::count_grid_points<Int>(p.vertices(), p.denominator(), false);
}

/// |nP n Z^2| (closed) or |nP° n Z^2| (strict). n = 0 gives the single point 0.
template <class Int>
Int dilation_count(const RationalPolygon<Int>& p, const std::type_identity_t<Int>& n, bool strict = false) {
    if (n == 0) return strict ? Int(0) : Int(1);
    auto v = detail::dilate<Int>(p.vertices(), n);
    if (n % p.denominator() == 0) {
        // nP is a lattice polygon: Pick's theorem
        for (auto& q : v) q = {q.x / p.denominator(), q.y / p.denominator()};
        const Int b = boundary_point_count(std::span<const ScaledPoint<Int>>(v));
        const Int interior = (twice_area(std::span<const ScaledPoint<Int>>(v)) - b + 2) / 2;
        return strict ? interior : interior + b;
    }
    return detail::count_grid_points<Int>(std::span<const ScaledPoint<Int>>(v), p.denominator(), strict);
}

/// Boundary and interior lattice points of the dilation nP, n >= 1.
template <class Int>
LatticeProfile<Int> lattice_profile(const RationalPolygon<Int>& p, const std::type_identity_t<Int>& n) {
    if (n < 1) throw DomainError("dilation factor must be positive");
    const Int total = dilation_count(p, n, false);
    const Int interior = dilation_count(p, n, true);
    return {total - interior, interior};
}

template <class Int>
PointProfile<Int> point_profile(const RationalPolygon<Int>& p) {
    auto lp = lattice_profile(p, Int(1));
    return {lp.total(), r_size(p), lp.boundary, lp.interior};
}

/// Vol(P) = 2 * area(P), exact.
template <class Int>
Rational<Int> normalized_volume(const RationalPolygon<Int>& p) {
    return Rational<Int>(twice_area(p.vertices()), p.denominator() * p.denominator());
}

/// All points of (1/r)Z^2 inside P, in scaled coordinates, column-major.
template <class Int>
std::vector<ScaledPoint<Int>> scaled_points(const RationalPolygon<Int>& p) {
    std::vector<ScaledPoint<Int>> out;
    detail::scan_columns<Int>(p.vertices(), Int(1), false, [&](const Int& i, const Int& lo, const Int& hi) {
        for (Int j = lo; j <= hi; ++j) out.push_back({i, j});
    });
    return out;
}

}  // namespace ratpoly
