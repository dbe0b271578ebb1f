#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratpoly/ehrhart/tuples.hpp"
#include "ratpoly/geometry/polygon.hpp"

namespace ratpoly {

/// An infinitely growable denominator-2 polygon realizing (b(P), b(2P), i(2P)).
/// Vertices below are twice the rational coordinates.
template <class Int = std::int64_t>
RationalPolygon<Int> zero_interior_family(std::int64_t b1, std::int64_t b2, std::int64_t i2) {
    if (!inf_growable_tuple_check(b1, b2, i2))
        throw DomainError("tuple is not admissible for an infinitely growable polygon");
    using Pts = std::vector<ScaledPoint<Int>>;
    auto make = [](Pts pts) { return RationalPolygon<Int>::from_points(Int(2), std::move(pts)); };
    const Int B1 = b1, B2 = b2, I2 = i2;

    if (i2 == 0) {
        if (b1 == 0) return make({{0, 1}, {1, 0}, {1, B2 - 2}});
        return make({{0, 0}, {0, 2 * (B1 - 1)}, {1, 0}, {1, B2 - 2 * B1}});
    }
    const ScaledPoint<Int> apex{1, I2 + 1};
    if (b1 == 0) return make({{0, 1}, {2, 1}, {1, I2 + 2}});
    if (b1 == 1) {
        switch (b2) {
            case 3: return make({{0, 0}, {2, 1}, apex});
            case 4: return make({{0, 0}, {0, 1}, {2, 1}, apex});
            case 5: return make({{0, 0}, {0, 1}, {1, 0}, {2, 1}, apex});
            default: return make({{0, -1}, {0, 1}, {2, 1}, apex});  // b2 = 6
        }
    }
    const Int top = 2 * B1 - 4;
    // With the extra row at y = -1/2 the apex sits half a unit lower than in
    // the b2 = 2b1 case, otherwise 2P picks up one more interior point.
    const ScaledPoint<Int> low_apex{1, I2};
    switch (b2 - 2 * b1) {
        case 0: return make({{0, 0}, {0, top}, {2, 0}, apex});
        case 1: return make({{0, -1}, {0, top}, {2, 0}, {1, -1}, low_apex});
        case 2: return make({{0, -1}, {0, top}, {2, 0}, {2, -1}, low_apex});
        case 3: return make({{0, -1}, {0, top}, {2, 1}, {2, -1}, low_apex});
        default: return make({{0, -1}, {0, top + 1}, {2, 1}, {2, -1}, low_apex});  // b2 = 2b1 + 4
    }
}

/// Seven families of polygons whose tuples lie on the boundary of the
/// region of condition (d).
enum class Family { F1 = 1, F2, F3, F4, F5, F6, F7 };

enum class BoundaryEquation {
    b2_equals_3,          // b(2P) = 3
    b2_equals_2b1,        // b(2P) = 2b(P)
    i2_equals_b1_2i1_m1,  // i(2P) = b(P) + 2i(P) - 1
    diagonal,             // b(2P) + i(2P) = 2b(P) + 6i(P) + 7
};

inline std::optional<Family> parse_family(std::string_view name) {
    if (name.size() == 2 && (name[0] == 'F' || name[0] == 'f') && name[1] >= '1' && name[1] <= '7')
        return static_cast<Family>(name[1] - '0');
    return std::nullopt;
}

inline EhrhartTuple boundary_family_tuple(Family f, std::int64_t i) {
    if (i < 1) throw DomainError("family index must be at least 1");
    switch (f) {
        case Family::F1: return {0, i, 3, 2 * i - 1};
        case Family::F2: return {2, i, 4, 2 * i + 1};
        case Family::F3: return {2, i, 4 * i + 8, 2 * i + 1};
        case Family::F4: return {1, i, 3, 3 * i};
        case Family::F5: return {4, i, 8, 4 * i + 1};
        case Family::F6: return {2 * i - 2, i, 4 * i + 2, 6 * i + 1};
        case Family::F7: return {4, i, 12, 6 * i + 3};
    }
    throw DomainError("unknown family");
}

inline EhrhartTuple boundary_family_tuple(std::string_view name, std::int64_t i) {
    auto f = parse_family(name);
    if (!f) throw DomainError("unknown family: " + std::string(name));
    return boundary_family_tuple(*f, i);
}

/// The boundary equations each family lies on.
inline std::vector<BoundaryEquation> family_equations(Family f) {
    using E = BoundaryEquation;
    switch (f) {
        case Family::F1: return {E::b2_equals_3, E::i2_equals_b1_2i1_m1};
        case Family::F2: return {E::b2_equals_2b1, E::i2_equals_b1_2i1_m1};
        case Family::F3: return {E::i2_equals_b1_2i1_m1};
        case Family::F4: return {E::b2_equals_3};
        case Family::F5: return {E::b2_equals_2b1};
        case Family::F6: return {E::diagonal};
        case Family::F7: return {E::diagonal};
    }
    return {};
}

inline bool satisfies(const EhrhartTuple& t, BoundaryEquation e) {
    switch (e) {
        case BoundaryEquation::b2_equals_3: return t.b2 == 3;
        case BoundaryEquation::b2_equals_2b1: return t.b2 == 2 * t.b1;
        case BoundaryEquation::i2_equals_b1_2i1_m1: return t.i2 == t.b1 + 2 * t.i1 - 1;
        case BoundaryEquation::diagonal: return t.b2 + t.i2 == 2 * t.b1 + 6 * t.i1 + 7;
    }
    return false;
}

}  // namespace ratpoly
