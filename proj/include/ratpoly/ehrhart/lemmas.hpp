#pragma once

#include <algorithm>
#include <cstdint>

#include "ratpoly/geometry/counting.hpp"
#include "ratpoly/geometry/reposition.hpp"
#include "ratpoly/geometry/width.hpp"

namespace ratpoly {

namespace detail {

/// Lattice points of a lattice polygon on the column x = c (closed or interior).
template <class Int>
Int column_count(const RationalPolygon<Int>& q, const Int& c, bool strict) {
    Int n = 0;
    scan_columns<Int>(q.vertices(), Int(1), strict, [&](const Int& i, const Int& lo, const Int& hi) {
        if (i == c) n = hi - lo + 1;
    });
    return n;
}

}  // namespace detail

/// For the lattice quadrilateral conv((0,y1),(0,y2),(2,y3),(2,y4)), whether
/// p0 + p2 = p1 + i1 + 2, where p_h counts lattice points on x = h and i1
/// counts interior lattice points on x = 1.
template <class Int = std::int64_t>
bool trapezium_identity_check(const Int& y1, const Int& y2, const Int& y3, const Int& y4) {
    if (y2 < y1 || y4 < y3) throw DomainError("trapezium expects y1 <= y2 and y3 <= y4");
    auto q = RationalPolygon<Int>::from_points(Int(1), {{0, y1}, {0, y2}, {2, y3}, {2, y4}});
    const Int p0 = detail::column_count(q, Int(0), false);
    const Int p1 = detail::column_count(q, Int(1), false);
    const Int p2 = detail::column_count(q, Int(2), false);
    const Int i1 = detail::column_count(q, Int(1), true);
    return p0 + p2 == p1 + i1 + 2;
}

/// Interior lattice points on x = h of q placed in its width box, against the
/// lower bound min(h, w1 - h) - 1. Requires 2 <= h <= w1 - 2.
template <class Int>
bool hourglass_check(const RationalPolygon<Int>& q, const std::type_identity_t<Int>& h) {
    if (q.denominator() != 1) throw ContractError("hourglass_check expects a lattice polygon");
    const Int w1 = width(q).width.numerator();
    if (h < 2 || w1 - 2 < h) throw DomainError("hourglass_check expects 2 <= h <= w1 - 2");
    const auto placed = reposition_to_width_box(q);
    const Int interior = detail::column_count(placed, h, true);
    return interior >= std::min(h, Int(w1 - h)) - 1;
}

}  // namespace ratpoly
