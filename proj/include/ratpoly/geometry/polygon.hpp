#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <type_traits>
#include <vector>

#include "ratpoly/errors.hpp"
#include "ratpoly/integer.hpp"

namespace ratpoly {

/// A point of (1/r)Z^2 stored as the integer point r*p.
template <class Int = std::int64_t>
struct ScaledPoint {
    Int x{0};
    Int y{0};

    ScaledPoint() = default;
    ScaledPoint(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}

    friend ScaledPoint operator+(const ScaledPoint& a, const ScaledPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend ScaledPoint operator-(const ScaledPoint& a, const ScaledPoint& b) { return {a.x - b.x, a.y - b.y}; }
    friend ScaledPoint operator*(const Int& s, const ScaledPoint& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const ScaledPoint& a, const ScaledPoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const ScaledPoint& a, const ScaledPoint& b) { return !(a == b); }
    friend bool operator<(const ScaledPoint& a, const ScaledPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
    friend std::ostream& operator<<(std::ostream& os, const ScaledPoint& p) {
        return os << '(' << p.x << ',' << p.y << ')';
    }
};

template <class Int>
Int cross(const ScaledPoint<Int>& a, const ScaledPoint<Int>& b) {
    return a.x * b.y - a.y * b.x;
}

/// Orientation of c relative to the directed line a -> b (positive = left).
template <class Int>
Int orient(const ScaledPoint<Int>& a, const ScaledPoint<Int>& b, const ScaledPoint<Int>& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// An integral dual vector, acting by u . p = a*x + b*y.
template <class Int = std::int64_t>
struct DualVector {
    Int a{0};
    Int b{0};

    friend bool operator==(const DualVector& l, const DualVector& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator!=(const DualVector& l, const DualVector& r) { return !(l == r); }
    friend std::ostream& operator<<(std::ostream& os, const DualVector& u) {
        return os << '(' << u.a << ',' << u.b << ')';
    }
};

template <class Int>
Int dot(const DualVector<Int>& u, const ScaledPoint<Int>& p) {
    return u.a * p.x + u.b * p.y;
}

/// Convex hull in counterclockwise order, strict extreme points only,
/// starting at the lexicographically smallest vertex. Duplicates allowed.
template <class Int>
std::vector<ScaledPoint<Int>> convex_hull(std::vector<ScaledPoint<Int>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<ScaledPoint<Int>> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// A rational polygon P of denominator r, stored as the lattice polygon rP.
///
/// Vertices are strict extreme points in counterclockwise order starting at
/// the lexicographically smallest one. Instances are immutable.
template <class Int = std::int64_t>
class RationalPolygon {
public:
    using Point = ScaledPoint<Int>;

    const Int& denominator() const noexcept { return r_; }
    std::span<const Point> vertices() const noexcept { return verts_; }
    std::size_t vertex_count() const noexcept { return verts_.size(); }
    const Point& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

    friend bool operator==(const RationalPolygon& a, const RationalPolygon& b) {
        return a.r_ == b.r_ && a.verts_ == b.verts_;
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalPolygon& p) {
        os << "r=" << p.r_ << " [";
        for (std::size_t i = 0; i < p.verts_.size(); ++i) os << (i ? "," : "") << p.verts_[i];
        return os << ']';
    }

    /// Hull of arbitrary points; throws DegenerateError below dimension two.
    static RationalPolygon from_points(Int r, std::vector<Point> pts) {
        if (r < 1) throw DomainError("denominator must be positive");
        if (pts.empty()) throw DegenerateError("empty point set");
        auto hull = convex_hull(std::move(pts));
        if (hull.size() < 3) throw DegenerateError("point set spans less than two dimensions");
        return RationalPolygon(std::move(r), std::move(hull));
    }

    /// Wraps a vertex list that is already a normalized hull. Unchecked.
    static RationalPolygon from_hull(Int r, std::vector<Point> hull) {
        return RationalPolygon(std::move(r), std::move(hull));
    }

    /// The same point set viewed at another denominator (scales rP).
    RationalPolygon with_denominator(const Int& r_new) const {
        if (r_new % r_ != 0 && r_ % r_new != 0) throw DomainError("incompatible denominators");
        std::vector<Point> v;
        v.reserve(verts_.size());
        for (const auto& p : verts_) {
            if (r_new >= r_) {
                v.push_back(Int(r_new / r_) * p);
            } else {
                Int f = r_ / r_new;
                if (p.x % f != 0 || p.y % f != 0) throw DomainError("vertex not on the coarser grid");
                v.push_back({p.x / f, p.y / f});
            }
        }
        return RationalPolygon(r_new, std::move(v));
    }

private:
    RationalPolygon(Int r, std::vector<Point> v) : r_(std::move(r)), verts_(std::move(v)) {}

    Int r_{1};
    std::vector<Point> verts_;
};

/// Hull of the given scaled points at denominator r.
template <class Int>
RationalPolygon<Int> make_polygon(const std::type_identity_t<Int>& r, std::vector<ScaledPoint<Int>> points) {
    return RationalPolygon<Int>::from_points(r, std::move(points));
}

inline RationalPolygon<std::int64_t> make_polygon(std::int64_t r,
                                                  std::initializer_list<ScaledPoint<std::int64_t>> pts) {
    return RationalPolygon<std::int64_t>::from_points(r, std::vector<ScaledPoint<std::int64_t>>(pts));
}

/// conv(P u {v}) at the denominator of P.
template <class Int>
RationalPolygon<Int> extend(const RationalPolygon<Int>& p, const ScaledPoint<Int>& v) {
    std::vector<ScaledPoint<Int>> pts(p.vertices().begin(), p.vertices().end());
    pts.push_back(v);
    return RationalPolygon<Int>::from_hull(p.denominator(), convex_hull(std::move(pts)));
}

/// Image under z -> M z + t applied to the scaled coordinates.
template <class Int>
RationalPolygon<Int> transform(const RationalPolygon<Int>& p, const std::type_identity_t<Int>& m00,
                               const std::type_identity_t<Int>& m01, const std::type_identity_t<Int>& m10,
                               const std::type_identity_t<Int>& m11, const ScaledPoint<Int>& t = {}) {
    std::vector<ScaledPoint<Int>> pts;
    pts.reserve(p.vertex_count());
    for (const auto& v : p.vertices()) pts.push_back({m00 * v.x + m01 * v.y + t.x, m10 * v.x + m11 * v.y + t.y});
    return RationalPolygon<Int>::from_points(p.denominator(), std::move(pts));
}

/// Twice the Euclidean area of rP (an integer).
template <class Int>
Int twice_area(std::span<const ScaledPoint<Int>> v) {
    Int s = 0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
    return s;
}

/// Lattice points of rP on its boundary.
template <class Int>
Int boundary_point_count(std::span<const ScaledPoint<Int>> v) {
    Int b = 0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        auto d = v[(i + 1) % n] - v[i];
        b += gcd(d.x, d.y);
    }
    return b;
}

/// Whether a scaled point lies in the closed polygon.
template <class Int>
bool contains(std::span<const ScaledPoint<Int>> hull, const ScaledPoint<Int>& p) {
    for (std::size_t i = 0, n = hull.size(); i < n; ++i)
        if (orient(hull[i], hull[(i + 1) % n], p) < 0) return false;
    return true;
}

template <class Int>
bool contains(const RationalPolygon<Int>& poly, const ScaledPoint<Int>& p) {
    return contains(poly.vertices(), p);
}

}  // namespace ratpoly
