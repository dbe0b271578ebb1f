#pragma once

#include <optional>

#include "ratpoly/geometry/polygon.hpp"
#include "ratpoly/geometry/width.hpp"

namespace ratpoly {

namespace detail {

template <class Int>
std::optional<RationalPolygon<Int>> place_in_box(const RationalPolygon<Int>& q, const DualVector<Int>& row0,
                                                 const DualVector<Int>& row1, const Int& w1, const Int& w2) {
    auto placed = transform(q, row0.a, row0.b, row1.a, row1.b);
    auto [xlo, xhi] = dual_range(placed, DualVector<Int>{1, 0});
    auto [ylo, yhi] = dual_range(placed, DualVector<Int>{0, 1});
    if (xhi - xlo != w1 || yhi - ylo != w2) return std::nullopt;
    return transform(placed, Int(1), Int(0), Int(0), Int(1), ScaledPoint<Int>{-xlo, -ylo});
}

}  // namespace detail

/// Equivalent copy of a lattice polygon inside [0, w1] x [0, w2], touching all
/// four sides, with the x-axis along a first-width direction.
template <class Int>
RationalPolygon<Int> reposition_to_width_box(const RationalPolygon<Int>& q) {
    if (q.denominator() != 1) throw ContractError("reposition_to_width_box expects a lattice polygon");
    const auto first = width(q);
    const auto second = second_width(q);
    const Int w1 = first.width.numerator();
    const Int w2 = second.width.numerator();
    const DualVector<Int> u1 = first.direction;

    // complete u1 to a unimodular basis, then pick the shear minimizing the y extent
    auto [s, t] = bezout(u1.a, u1.b);
    const DualVector<Int> base{-t, s};
    auto row = [&](const Int& k) { return DualVector<Int>{base.a + k * u1.a, base.b + k * u1.b}; };
    auto extent = [&](const Int& k) { return scaled_width_along(q, row(k)); };
    Int k = 0;
    Int best = extent(k);
    for (int dir : {1, -1}) {
        for (Int step = k + dir;; step += dir) {
            Int e = extent(step);
            if (e >= best) break;
            best = e;
            k = step;
        }
    }
    if (auto placed = detail::place_in_box(q, u1, row(k), w1, w2)) return *placed;

    // fallback: any pair of realizing directions forming a lattice basis
    for (const auto& u : dual_vectors_within(q, w1)) {
        if (scaled_width_along(q, u) != w1) continue;
        for (const auto& v : dual_vectors_within(q, w2)) {
            const Int det = u.a * v.b - u.b * v.a;
            if (det != 1 && det != -1) continue;
            if (auto placed = detail::place_in_box(q, u, v, w1, w2)) return *placed;
        }
    }
    throw RepositionError("no unimodular placement realizes the width box");
}

}  // namespace ratpoly
