#pragma once

#include <vector>

#include "ratpoly/geometry/polygon.hpp"

namespace ratpoly {

/// x lies in the penumbra v - cone(P - v) iff v lies in conv(P, x).
template <class Int>
bool in_penumbra(const RationalPolygon<Int>& p, const ScaledPoint<Int>& v, const ScaledPoint<Int>& x) {
    std::vector<ScaledPoint<Int>> pts(p.vertices().begin(), p.vertices().end());
    pts.push_back(x);
    auto hull = convex_hull(std::move(pts));
    return contains(std::span<const ScaledPoint<Int>>(hull), v);
}

}  // namespace ratpoly
