#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ratpoly/ehrhart/tuples.hpp"
#include "ratpoly/enumeration/classify.hpp"
#include "ratpoly/parallel.hpp"

namespace ratpoly {

template <class Int = std::int64_t>
struct TupleFinding {
    CanonicalKey<Int> key;
    EhrhartTuple tuple;
    std::vector<std::string> detail;
};

/// Verdict counts and bound violations over a denominator-2 dataset.
template <class Int = std::int64_t>
struct VerificationReport {
    std::size_t total{0};
    std::array<std::size_t, 5> verdict_counts{};  // indexed by TupleCondition
    std::vector<TupleFinding<Int>> exceptions;
    /// b(2P) >= max(3, 2b(P)) for all, i(2P) >= b(P) + 2i(P) - 1 when i(P) > 0.
    std::vector<TupleFinding<Int>> unconditional_violations;
    /// b(2P) + i(2P) <= 2b(P) + 6i(P) + 7.
    std::vector<TupleFinding<Int>> diagonal_violations;
    /// Members with interior lattice points in a zero-interior dataset.
    std::vector<TupleFinding<Int>> interior_violations;

    std::size_t count(TupleCondition c) const { return verdict_counts[static_cast<std::size_t>(c)]; }
};

/// Classifies every member's tuple and checks the bounds. Findings are listed
/// in dataset order.
template <class Int>
VerificationReport<Int> verify_entries(const std::vector<std::pair<CanonicalKey<Int>, RationalPolygon<Int>>>& members,
                                       bool zero_interior, unsigned threads = 0) {
    std::vector<EhrhartTuple> tuples(members.size());
    parallel_for(members.size(), threads, [&](std::size_t i) { tuples[i] = ehrhart_tuple(members[i].second); });

    VerificationReport<Int> rep;
    rep.total = members.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& t = tuples[i];
        const auto& key = members[i].first;
        auto verdict = classify_tuple(t);
        ++rep.verdict_counts[static_cast<std::size_t>(verdict.condition)];
        if (verdict.condition == TupleCondition::exception)
            rep.exceptions.push_back({key, t, verdict.violated_inequalities});

        std::vector<std::string> bad;
        if (t.b2 < std::max<std::int64_t>(3, 2 * t.b1)) bad.emplace_back("b2>=max(3,2b1)");
        if (t.i1 > 0 && t.i2 < t.b1 + 2 * t.i1 - 1) bad.emplace_back("i2>=b1+2i1-1");
        if (!bad.empty()) rep.unconditional_violations.push_back({key, t, bad});
        if (t.b2 + t.i2 > 2 * t.b1 + 6 * t.i1 + 7) rep.diagonal_violations.push_back({key, t, {"b2+i2<=2b1+6i1+7"}});
        if (zero_interior && t.i1 != 0) rep.interior_violations.push_back({key, t, {"i1=0"}});
    }
    return rep;
}

template <class Int>
VerificationReport<Int> verify_dataset(const ClassificationDataset<Int>& ds, bool zero_interior, unsigned threads = 0) {
    if (ds.r != 2) throw ContractError("verify_dataset expects a denominator-2 dataset");
    std::vector<std::pair<CanonicalKey<Int>, RationalPolygon<Int>>> members;
    members.reserve(ds.polygons.size());
    for (const auto& e : ds.polygons) members.emplace_back(e.key, e.polygon);
    return verify_entries(members, zero_interior, threads);
}

}  // namespace ratpoly
