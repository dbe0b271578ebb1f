#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "ratpoly/geometry/polygon.hpp"

namespace ratpoly {

/// Canonical key of an affine unimodular equivalence class: the denominator
/// followed by the canonical scaled vertex list, flattened.
template <class Int = std::int64_t>
class CanonicalKey {
public:
    CanonicalKey() = default;
    explicit CanonicalKey(std::vector<Int> data) : data_(std::move(data)) {}

    const std::vector<Int>& data() const noexcept { return data_; }
    const Int& denominator() const { return data_.front(); }

    /// The canonical representative polygon encoded by the key.
    RationalPolygon<Int> polygon() const {
        std::vector<ScaledPoint<Int>> v;
        for (std::size_t i = 1; i + 1 < data_.size(); i += 2) v.push_back({data_[i], data_[i + 1]});
        return RationalPolygon<Int>::from_points(data_.front(), std::move(v));
    }

    /// Text form "r;x y;x y;..." (no commas, safe inside CSV).
    std::string str() const {
        std::ostringstream os;
        os << data_.front();
        for (std::size_t i = 1; i + 1 < data_.size(); i += 2) os << ';' << data_[i] << ' ' << data_[i + 1];
        return os.str();
    }

    friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) { return a.data_ == b.data_; }
    friend bool operator!=(const CanonicalKey& a, const CanonicalKey& b) { return !(a == b); }
    friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) { return a.data_ < b.data_; }
    friend std::ostream& operator<<(std::ostream& os, const CanonicalKey& k) { return os << k.str(); }

private:
    std::vector<Int> data_;
};

namespace detail {

/// Candidate signature for the directed edge (a, b) of a CCW vertex list:
/// map primitive(b - a) to (1, 0) by a det +1 matrix, fix the remaining shear
/// freedom so the leftmost highest vertex m satisfies 0 <= x(m) < H, then
/// translate by rZ^2 so the image of a lies in [0, r)^2.
template <class Int>
void edge_signature(const std::vector<ScaledPoint<Int>>& v, std::size_t start, const Int& r, std::vector<Int>& out) {
    const std::size_t n = v.size();
    const auto& a = v[start];
    const auto& b = v[(start + 1) % n];
    auto d = b - a;
    const Int g = gcd(d.x, d.y);
    const Int dx = d.x / g, dy = d.y / g;
    // rows (p, q) and (-dy, dx) with p*dx + q*dy = 1
    auto [p, q] = bezout(dx, dy);
    auto apply = [&](const ScaledPoint<Int>& z) { return ScaledPoint<Int>{p * z.x + q * z.y, dx * z.y - dy * z.x}; };

    const ScaledPoint<Int> a_img = apply(a);
    // relative to the image of a, every vertex has y >= 0
    Int height = 0, top_x = 0;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        auto z = apply(v[i]) - a_img;
        if (first || height < z.y || (z.y == height && z.x < top_x)) {
            height = z.y;
            top_x = z.x;
            first = false;
        }
    }
    // shear x -> x + k*y with 0 <= top_x + k*height < height
    const Int k = -floor_div(top_x, height);
    const ScaledPoint<Int> a_sheared{a_img.x + k * a_img.y, a_img.y};
    const ScaledPoint<Int> shift{mod_floor(a_sheared.x, r) - a_sheared.x, mod_floor(a_sheared.y, r) - a_sheared.y};
    out.clear();
    out.push_back(r);
    for (std::size_t i = 0; i < n; ++i) {
        auto z = apply(v[(start + i) % n]);
        out.push_back(z.x + k * z.y + shift.x);
        out.push_back(z.y + shift.y);
    }
}

}  // namespace detail

/// Canonical key: lexicographically least edge signature over all directed
/// edges of rP and of its mirror image (x, y) -> (x, -y).
template <class Int>
CanonicalKey<Int> canonical_form(const RationalPolygon<Int>& poly) {
    const Int& r = poly.denominator();
    std::vector<ScaledPoint<Int>> verts(poly.vertices().begin(), poly.vertices().end());
    std::vector<ScaledPoint<Int>> mirrored;
    mirrored.reserve(verts.size());
    for (auto it = verts.rbegin(); it != verts.rend(); ++it) mirrored.push_back({it->x, -it->y});

    std::vector<Int> best, cand;
    for (const auto* vs : {&verts, &mirrored}) {
        for (std::size_t s = 0; s < vs->size(); ++s) {
            detail::edge_signature(*vs, s, r, cand);
            if (best.empty() || cand < best) best.swap(cand);
        }
    }
    return CanonicalKey<Int>(std::move(best));
}

/// Canonical representative: the polygon whose vertex list is the key.
template <class Int>
RationalPolygon<Int> canonical_polygon(const RationalPolygon<Int>& poly) {
    return canonical_form(poly).polygon();
}

template <class Int>
bool equivalent(const RationalPolygon<Int>& a, const RationalPolygon<Int>& b) {
    return canonical_form(a) == canonical_form(b);
}

}  // namespace ratpoly

template <class Int>
struct std::hash<ratpoly::CanonicalKey<Int>> {
    std::size_t operator()(const ratpoly::CanonicalKey<Int>& k) const noexcept {
        return boost::hash_range(k.data().begin(), k.data().end());
    }
};
