#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ratpoly/enumeration/growth.hpp"
#include "ratpoly/enumeration/minimal.hpp"
#include "ratpoly/parallel.hpp"

namespace ratpoly {

/// One member of a classification: canonical representative plus provenance.
template <class Int = std::int64_t>
struct DatasetEntry {
    CanonicalKey<Int> key;
    RationalPolygon<Int> polygon;
    Int r_size{0};
    std::size_t seed{0};  // index into the seed list that produced it
};

/// Per-stratum bookkeeping of a growing run.
template <class Int = std::int64_t>
struct StratumStats {
    std::size_t seed{0};
    Int r_size{0};
    std::size_t inf{0};
    std::size_t fin{0};
    std::size_t generated{0};  // children before deduplication
};

/// Deduplicated finitely growable polygons of fixed denominator and size,
/// sorted by (r_size, key).
template <class Int = std::int64_t>
struct ClassificationDataset {
    Int r{0};
    Int k{0};
    bool zero_interior{false};
    std::vector<DatasetEntry<Int>> polygons;
    std::vector<RationalPolygon<Int>> seeds;
    std::vector<StratumStats<Int>> strata;

    std::size_t size() const { return polygons.size(); }
};

/// Frontier nodes of one stratum, handed to an optional observer.
template <class Int = std::int64_t>
struct FrontierNode {
    CanonicalKey<Int> key;
    RationalPolygon<Int> polygon;
    std::size_t seed{0};
};

template <class Int = std::int64_t>
struct GrowthFrontier {
    Int stratum_r_size{0};
    std::vector<FrontierNode<Int>> to_grow_inf;
    std::vector<FrontierNode<Int>> to_grow_fin;
};

template <class Int = std::int64_t>
struct ClassifyOptions {
    unsigned threads{0};  // 0 = all cores
    std::function<void(const GrowthFrontier<Int>&)> on_stratum;
};

namespace detail {

template <class Int>
struct Child {
    CanonicalKey<Int> key;
    RationalPolygon<Int> polygon;
    bool inf;
    std::size_t seed;
};

/// Grows one stratum into the next. Children are merged by key; a polygon
/// reached from several parents keeps the smallest seed index.
template <class Int>
GrowthFrontier<Int> advance(const GrowthFrontier<Int>& cur, const GrowthRules<Int>& rules, unsigned threads,
                            std::size_t& generated) {
    const std::size_t n_inf = cur.to_grow_inf.size();
    const std::size_t n = n_inf + cur.to_grow_fin.size();
    std::vector<std::vector<Child<Int>>> per_parent(n);
    parallel_for(n, threads, [&](std::size_t i) {
        const bool finite = i >= n_inf;
        const auto& node = finite ? cur.to_grow_fin[i - n_inf] : cur.to_grow_inf[i];
        auto res = grow_step(node.polygon, rules, finite);
        auto& out = per_parent[i];
        out.reserve(res.inf.size() + res.fin.size());
        for (auto& g : res.inf) out.push_back({std::move(g.key), std::move(g.polygon), true, node.seed});
        for (auto& g : res.fin) out.push_back({std::move(g.key), std::move(g.polygon), false, node.seed});
    });
    std::vector<Child<Int>> all;
    for (auto& v : per_parent)
        for (auto& c : v) all.push_back(std::move(c));
    generated = all.size();
    std::stable_sort(all.begin(), all.end(), [](const Child<Int>& a, const Child<Int>& b) { return a.key < b.key; });

    GrowthFrontier<Int> next;
    next.stratum_r_size = cur.stratum_r_size + 1;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        bool inf = true;
        std::size_t seed = all[i].seed;
        for (; j < all.size() && all[j].key == all[i].key; ++j) {
            inf = inf && all[j].inf;  // a finite derivation is authoritative
            seed = std::min(seed, all[j].seed);
        }
        FrontierNode<Int> node{std::move(all[i].key), std::move(all[i].polygon), seed};
        (inf ? next.to_grow_inf : next.to_grow_fin).push_back(std::move(node));
        i = j;
    }
    return next;
}

/// The main growing loop from one starting frontier.
template <class Int>
void run_growth(GrowthFrontier<Int> frontier, const GrowthRules<Int>& rules, const ClassifyOptions<Int>& opts,
                std::size_t stats_seed, ClassificationDataset<Int>& ds) {
    std::size_t generated = 0;
    while (!frontier.to_grow_inf.empty() || !frontier.to_grow_fin.empty()) {
        if (opts.on_stratum) opts.on_stratum(frontier);
        ds.strata.push_back({stats_seed, frontier.stratum_r_size, frontier.to_grow_inf.size(),
                             frontier.to_grow_fin.size(), generated});
        auto next = advance(frontier, rules, opts.threads, generated);
        for (auto& node : frontier.to_grow_fin)
            ds.polygons.push_back({node.key, node.key.polygon(), frontier.stratum_r_size, node.seed});
        frontier = std::move(next);
    }
}

template <class Int>
void finalize(ClassificationDataset<Int>& ds) {
    std::sort(ds.polygons.begin(), ds.polygons.end(), [](const DatasetEntry<Int>& a, const DatasetEntry<Int>& b) {
        if (a.r_size != b.r_size) return a.r_size < b.r_size;
        return a.key < b.key;
    });
    auto dup = std::adjacent_find(ds.polygons.begin(), ds.polygons.end(),
                                  [](const auto& a, const auto& b) { return a.key == b.key; });
    if (dup != ds.polygons.end()) throw std::logic_error("duplicate polygon across seeds: " + dup->key.str());
}

template <class Int>
FrontierNode<Int> make_node(const RationalPolygon<Int>& p, std::size_t seed) {
    auto key = canonical_form(p);
    return {key, key.polygon(), seed};
}

}  // namespace detail

/// Every finitely growable polygon of denominator r and size k up to
/// equivalence. r = 1 (k >= 3) returns the lattice polygons of size k.
template <class Int = std::int64_t>
ClassificationDataset<Int> classify(const std::type_identity_t<Int>& r, const std::type_identity_t<Int>& k,
                                    const ClassifyOptions<Int>& opts = {}) {
    if (r < 1 || k < 0) throw DomainError("classify expects r >= 1 and k >= 0");
    ClassificationDataset<Int> ds;
    ds.r = r;
    ds.k = k;
    if (r == 1) {
        if (k < 3) throw ContractError("denominator 1 requires k >= 3");
        for (const auto& q : lattice_polygons_of_size<Int>(k)) {
            auto key = canonical_form(q);
            ds.polygons.push_back({key, key.polygon(), r_size(q), 0});
        }
        ds.seeds.push_back(one_row_triangle<Int>(k));
        detail::finalize(ds);
        return ds;
    }

    ds.seeds = minimal_polygons<Int>(r, k);
    GrowthRules<Int> rules;
    rules.size = k;
    if (k == 0) {
        // all size-zero seeds grow together; none is finitely growable
        GrowthFrontier<Int> f;
        f.stratum_r_size = r_size(ds.seeds.front());
        for (std::size_t i = 0; i < ds.seeds.size(); ++i) f.to_grow_inf.push_back(detail::make_node(ds.seeds[i], i));
        std::sort(f.to_grow_inf.begin(), f.to_grow_inf.end(), [](auto& a, auto& b) { return a.key < b.key; });
        detail::run_growth(std::move(f), rules, opts, 0, ds);
    } else {
        for (std::size_t i = 0; i < ds.seeds.size(); ++i) {
            GrowthFrontier<Int> f;
            f.stratum_r_size = r_size(ds.seeds[i]);
            auto node = detail::make_node(ds.seeds[i], i);
            (is_infinitely_growable(ds.seeds[i]) ? f.to_grow_inf : f.to_grow_fin).push_back(std::move(node));
            detail::run_growth(std::move(f), rules, opts, i, ds);
        }
    }
    detail::finalize(ds);
    return ds;
}

/// The ten minimal polygons of finitely growable denominator-2 polygons
/// without interior lattice points, in half-integer scaled coordinates.
template <class Int = std::int64_t>
std::vector<RationalPolygon<Int>> zero_interior_seeds() {
    using P = std::vector<ScaledPoint<Int>>;
    const std::vector<P> pts{
        {{0, 0}, {1, 0}, {0, 1}},
        {{1, 1}, {1, 2}, {2, 1}},
        {{0, 0}, {2, 0}, {0, 1}},
        {{0, 0}, {2, 0}, {0, 2}},
        {{0, 0}, {2, 0}, {0, 2}, {2, 2}},
        {{0, 0}, {2, 0}, {0, 4}},
        {{0, 0}, {2, 0}, {0, 4}, {2, 2}},
        {{0, 0}, {2, 0}, {0, 6}},
        {{0, 0}, {2, 0}, {0, 6}, {2, 2}},
        {{0, 0}, {4, 0}, {0, 4}},
    };
    std::vector<RationalPolygon<Int>> out;
    for (const auto& p : pts) out.push_back(RationalPolygon<Int>::from_points(Int(2), p));
    return out;
}

/// Finitely growable denominator-2 polygons with no interior lattice point.
///
/// Each seed grows at its own size with interior points discarded and at
/// most 8 (1/2)-points on any non-integral line. conv((0,0),(2,0),(0,2)) is
/// final as it stands: every facet has a lattice point in its relative
/// interior, so any growth creates an interior point.
template <class Int = std::int64_t>
ClassificationDataset<Int> classify_zero_interior(const ClassifyOptions<Int>& opts = {}) {
    ClassificationDataset<Int> ds;
    ds.r = 2;
    ds.k = -1;  // mixed sizes
    ds.zero_interior = true;
    ds.seeds = zero_interior_seeds<Int>();
    const auto big_triangle = canonical_form(ds.seeds.back());
    for (std::size_t i = 0; i < ds.seeds.size(); ++i) {
        const auto& seed = ds.seeds[i];
        auto node = detail::make_node(seed, i);
        if (node.key == big_triangle) {
            ds.polygons.push_back({node.key, node.polygon, r_size(seed), i});
            continue;
        }
        GrowthRules<Int> rules;
        rules.size = size(seed);
        rules.discard_interior = true;
        rules.collinear_cap = Int(8);
        GrowthFrontier<Int> f;
        f.stratum_r_size = r_size(seed);
        (is_infinitely_growable(seed) ? f.to_grow_inf : f.to_grow_fin).push_back(std::move(node));
        detail::run_growth(std::move(f), rules, opts, i, ds);
    }
    detail::finalize(ds);
    return ds;
}

}  // namespace ratpoly
