#pragma once

#include <cstdint>
#include <stdexcept>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace ratpoly {

/// Arbitrary precision integer. Every algorithm in the library is a template
/// over the integer type; `std::int64_t` is the fast default and `BigInt` is
/// available when coordinates may grow without bound.
using BigInt = boost::multiprecision::cpp_int;

template <class Int>
using Rational = boost::rational<Int>;

template <class Int>
Int abs_value(const Int& a) {
    return a < 0 ? Int(-a) : a;
}

template <class Int>
Int gcd(Int a, Int b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Floor of a / b for b != 0.
template <class Int>
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

template <class Int>
Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

/// Non-negative residue of a modulo m > 0.
template <class Int>
Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Extended Euclid: returns (x, y) with a*x + b*y = gcd(a, b) >= 0.
template <class Int>
std::pair<Int, Int> bezout(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_s, old_t};
}

/// Floor and ceiling of a rational.
template <class Int>
Int floor_of(const Rational<Int>& q) {
    return floor_div(q.numerator(), q.denominator());
}

template <class Int>
Int ceil_of(const Rational<Int>& q) {
    return ceil_div(q.numerator(), q.denominator());
}

}  // namespace ratpoly
