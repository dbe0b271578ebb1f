#pragma once

// Brute-force reference implementations used by the tests. They share no
// code with the library beyond the polygon type.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "ratpoly/ratpoly.hpp"

namespace oracle {

using I = std::int64_t;
using Pt = ratpoly::ScaledPoint<I>;
using Poly = ratpoly::RationalPolygon<I>;

inline I cr(const Pt& o, const Pt& a, const Pt& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

/// Gift wrapping. Returns the strict extreme points counterclockwise.
inline std::vector<Pt> jarvis(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Pt> hull;
    Pt cur = pts.front();
    do {
        hull.push_back(cur);
        Pt next = pts[0] == cur ? pts[1] : pts[0];
        for (const auto& q : pts) {
            if (q == cur) continue;
            const I c = cr(cur, next, q);
            auto d2 = [&](const Pt& p) { return (p.x - cur.x) * (p.x - cur.x) + (p.y - cur.y) * (p.y - cur.y); };
            if (c < 0 || (c == 0 && d2(q) > d2(next))) next = q;
        }
        cur = next;
    } while (!(cur == hull.front()) && hull.size() <= pts.size());
    return hull;
}

/// Membership in the closed (or open) convex polygon by edge half-planes.
inline bool inside(const std::vector<Pt>& hull, const Pt& p, bool strict = false) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const I c = cr(hull[i], hull[(i + 1) % hull.size()], p);
        if (strict ? c <= 0 : c < 0) return false;
    }
    return true;
}

/// Points of (step Z)^2 in the (dilated) scaled polygon, by bounding-box scan.
inline I box_count(const std::vector<Pt>& hull, I step, bool strict = false) {
    I xl = hull[0].x, xh = xl, yl = hull[0].y, yh = yl;
    for (const auto& p : hull) {
        xl = std::min(xl, p.x), xh = std::max(xh, p.x);
        yl = std::min(yl, p.y), yh = std::max(yh, p.y);
    }
    auto fl = [&](I a) { return a >= 0 ? a / step : -((-a + step - 1) / step); };
    I n = 0;
    for (I i = fl(xl); i * step <= xh; ++i)
        for (I j = fl(yl); j * step <= yh; ++j)
            if (inside(hull, {i * step, j * step}, strict)) ++n;
    return n;
}

inline std::vector<Pt> verts(const Poly& p) { return {p.vertices().begin(), p.vertices().end()}; }

inline std::vector<Pt> scaled(const Poly& p, I n) {
    auto v = verts(p);
    for (auto& q : v) q = {q.x * n, q.y * n};
    return v;
}

/// |nP n Z^2| (or interior).
inline I ehrhart(const Poly& p, I n, bool strict = false) {
    if (n == 0) return strict ? 0 : 1;
    return box_count(scaled(p, n), p.denominator(), strict);
}

inline I r_size(const Poly& p) { return box_count(verts(p), 1); }

/// Boundary points of nP as closed minus open.
inline std::pair<I, I> profile(const Poly& p, I n) {
    const I all = ehrhart(p, n), in = ehrhart(p, n, true);
    return {all - in, in};
}

/// Minimum width over all primitive u in [-bound, bound]^2, with the smallest
/// realizing vector under (|a|,|b|,a,b) after fixing the sign.
inline std::pair<ratpoly::Rational<I>, ratpoly::DualVector<I>> width(const Poly& p, I bound = 24,
                                                                    std::optional<ratpoly::DualVector<I>> excl = {}) {
    std::optional<I> best;
    ratpoly::DualVector<I> arg{0, 0};
    auto rank = [](const ratpoly::DualVector<I>& u) { return std::make_tuple(std::abs(u.a), std::abs(u.b), u.a, u.b); };
    for (I a = -bound; a <= bound; ++a)
        for (I b = -bound; b <= bound; ++b) {
            if (std::gcd(a, b) != 1) continue;
            if (a < 0 || (a == 0 && b < 0)) continue;
            if (excl && a * excl->b - b * excl->a == 0) continue;
            I lo = 0, hi = 0;
            bool first = true;
            for (const auto& q : p.vertices()) {
                const I d = a * q.x + b * q.y;
                if (first) lo = hi = d, first = false;
                lo = std::min(lo, d), hi = std::max(hi, d);
            }
            const I w = hi - lo;
            ratpoly::DualVector<I> u{a, b};
            if (!best || w < *best || (w == *best && rank(u) < rank(arg))) best = w, arg = u;
        }
    return {ratpoly::Rational<I>(*best, p.denominator()), arg};
}

/// Searches U in GL(2,Z) with entries in [-bound, bound] and t in rZ^2 with
/// U.P + t = Q as vertex sets.
inline bool unimodular_witness(const Poly& p, const Poly& q, I bound = 4) {
    if (p.denominator() != q.denominator() || p.vertex_count() != q.vertex_count()) return false;
    const I r = p.denominator();
    std::set<std::pair<I, I>> target;
    for (const auto& v : q.vertices()) target.insert({v.x, v.y});
    const auto& a = p.vertex(0);
    for (I m00 = -bound; m00 <= bound; ++m00)
        for (I m01 = -bound; m01 <= bound; ++m01)
            for (I m10 = -bound; m10 <= bound; ++m10)
                for (I m11 = -bound; m11 <= bound; ++m11) {
                    const I det = m00 * m11 - m01 * m10;
                    if (det != 1 && det != -1) continue;
                    for (const auto& b : q.vertices()) {
                        const I tx = b.x - (m00 * a.x + m01 * a.y), ty = b.y - (m10 * a.x + m11 * a.y);
                        if (tx % r != 0 || ty % r != 0) continue;
                        std::set<std::pair<I, I>> img;
                        for (const auto& v : p.vertices())
                            img.insert({m00 * v.x + m01 * v.y + tx, m10 * v.x + m11 * v.y + ty});
                        if (img == target) return true;
                    }
                }
    return false;
}

/// Random two-dimensional polygon of denominator r with scaled coordinates
/// in [lo, hi].
template <class Rng>
Poly random_polygon(Rng& rng, I r, I lo, I hi, int max_points = 7) {
    std::uniform_int_distribution<I> c(lo, hi);
    std::uniform_int_distribution<int> n(3, max_points);
    for (;;) {
        std::vector<Pt> pts;
        const int m = n(rng);
        for (int i = 0; i < m; ++i) pts.push_back({c(rng), c(rng)});
        if (jarvis(pts).size() >= 3) return ratpoly::make_polygon<I>(r, pts);
    }
}

/// Random element of GL(2,Z) with entries in [-5, 5].
template <class Rng>
std::array<I, 4> random_unimodular(Rng& rng) {
    std::uniform_int_distribution<I> e(-5, 5);
    for (;;) {
        std::array<I, 4> m{e(rng), e(rng), e(rng), e(rng)};
        const I det = m[0] * m[3] - m[1] * m[2];
        if (det == 1 || det == -1) return m;
    }
}

/// Tuples (b(P), b(2P), i(2P)) listed for the zero-interior classification.
inline std::set<std::array<I, 3>> zero_interior_tuples() {
    return {{0, 3, 3},  {1, 4, 3},  {1, 4, 4},  {1, 5, 3},  {1, 6, 1},  {2, 4, 3},  {2, 5, 3},  {2, 5, 4},  {2, 6, 3},
            {2, 6, 4},  {2, 7, 1},  {2, 7, 3},  {2, 8, 1},  {3, 6, 3},  {3, 6, 4},  {3, 7, 3},  {3, 7, 4},  {3, 8, 3},
            {3, 8, 4},  {3, 9, 1},  {3, 9, 3},  {4, 8, 3},  {4, 8, 4},  {4, 8, 5},  {4, 9, 3},  {4, 9, 4},  {4, 10, 3},
            {4, 10, 4}, {5, 10, 3}, {5, 10, 4}, {5, 11, 3}, {5, 11, 4}, {6, 12, 3}, {6, 12, 4}};
}

}  // namespace oracle
