#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ratpoly/geometry/counting.hpp"

namespace ratpoly {

/// |nP n Z^2| by direct scan; n = 0 gives 1.
template <class Int>
Int ehrhart_count(const RationalPolygon<Int>& p, const std::type_identity_t<Int>& n) {
    if (n < 0) throw DomainError("ehrhart_count expects n >= 0");
    return dilation_count(p, n, false);
}

/// Ehrhart quasi-polynomial with period r: component i holds (a2, a1, a0)
/// governing n = i mod r.
template <class Int = std::int64_t>
struct QuasiPolynomial {
    using Coefficients = std::array<Rational<Int>, 3>;  // a2, a1, a0

    Int period{1};
    std::vector<Coefficients> components;

    const Coefficients& component(const Int& n) const {
        return components[static_cast<std::size_t>(mod_floor(n, period))];
    }

    /// Value at any integer n, including negative n.
    Rational<Int> evaluate(const Int& n) const {
        const auto& c = component(n);
        Rational<Int> x(n);
        return c[0] * x * x + c[1] * x + c[2];
    }
};

/// Coefficients from boundary-interior counts of the dilations iP and
/// (r - i)P°: a2 = Vol/2, a1 from the reciprocity difference, a0 solved from
/// the value at n = i.
template <class Int>
QuasiPolynomial<Int> quasi_polynomial(const RationalPolygon<Int>& p) {
    const Int& r = p.denominator();
    const Rational<Int> vol = normalized_volume(p);
    QuasiPolynomial<Int> qp;
    qp.period = r;
    for (Int i = 0; i < r; ++i) {
        const Int closed = dilation_count(p, i, false);
        const Int open = dilation_count(p, Int(r - i), true);
        const Rational<Int> a2 = vol / Int(2);
        const Rational<Int> a1 = (Rational<Int>(closed - open) - Rational<Int>(r * (2 * i - r), 2) * vol) / r;
        const Rational<Int> a0 = Rational<Int>(closed) - a2 * i * i - a1 * i;
        qp.components.push_back({a2, a1, a0});
    }
    return qp;
}

/// Ehrhart-Macdonald reciprocity at n: ehr(-n) = |nP° n Z^2|.
template <class Int>
bool reciprocity_check(const RationalPolygon<Int>& p, const std::type_identity_t<Int>& n) {
    if (n < 1) throw DomainError("reciprocity_check expects n >= 1");
    const auto qp = quasi_polynomial(p);
    return qp.evaluate(Int(-n)) == Rational<Int>(dilation_count(p, n, true));
}

}  // namespace ratpoly
