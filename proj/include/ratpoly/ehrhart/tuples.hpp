#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ratpoly/geometry/counting.hpp"

namespace ratpoly {

/// (b(P), i(P), b(2P), i(2P)) of a denominator-2 polygon.
struct EhrhartTuple {
    std::int64_t b1{0};
    std::int64_t i1{0};
    std::int64_t b2{0};
    std::int64_t i2{0};

    friend auto operator<=>(const EhrhartTuple&, const EhrhartTuple&) = default;
    friend std::ostream& operator<<(std::ostream& os, const EhrhartTuple& t) {
        return os << '(' << t.b1 << ',' << t.i1 << ',' << t.b2 << ',' << t.i2 << ')';
    }
};

template <class Int>
EhrhartTuple ehrhart_tuple(const RationalPolygon<Int>& p) {
    if (p.denominator() != 2) throw ContractError("ehrhart_tuple expects denominator 2");
    const auto one = lattice_profile(p, Int(1));
    const auto two = lattice_profile(p, Int(2));
    return {static_cast<std::int64_t>(one.boundary), static_cast<std::int64_t>(one.interior),
            static_cast<std::int64_t>(two.boundary), static_cast<std::int64_t>(two.interior)};
}

enum class TupleCondition { a, b, c, d, exception };

inline const char* to_string(TupleCondition c) {
    switch (c) {
        case TupleCondition::a: return "a";
        case TupleCondition::b: return "b";
        case TupleCondition::c: return "c";
        case TupleCondition::d: return "d";
        case TupleCondition::exception: return "exception";
    }
    return "?";
}

struct TupleVerdict {
    TupleCondition condition{TupleCondition::exception};
    std::vector<std::string> violated_inequalities;  // empty unless exception
};

/// Checks conditions (a) through (d) in order and returns the first that
/// holds. On failure lists every violated clause, tagged by condition.
inline TupleVerdict classify_tuple(const EhrhartTuple& t) {
    const auto lower = std::max<std::int64_t>(3, 2 * t.b1);
    struct Clause {
        const char* id;
        bool ok;
    };
    const std::vector<std::pair<TupleCondition, std::vector<Clause>>> conditions{
        {TupleCondition::a,
         {{"a:i1=0", t.i1 == 0}, {"a:i2=0", t.i2 == 0}, {"a:b2>=max(3,2b1)", t.b2 >= lower}}},
        {TupleCondition::b,
         {{"b:b1=0", t.b1 == 0}, {"b:i1=0", t.i1 == 0}, {"b:b2=4", t.b2 == 4}, {"b:i2>0", t.i2 > 0}}},
        {TupleCondition::c,
         {{"c:i1=0", t.i1 == 0},
          {"c:i2>0", t.i2 > 0},
          {"c:b1>0", t.b1 > 0},
          {"c:b2>=max(3,2b1)", t.b2 >= lower},
          {"c:b2<=2b1+4", t.b2 <= 2 * t.b1 + 4},
          {"c:b2<=2i2+6", t.b2 <= 2 * t.i2 + 6}}},
        {TupleCondition::d,
         {{"d:i1>0", t.i1 > 0},
          {"d:b2>=max(3,2b1)", t.b2 >= lower},
          {"d:i2>=b1+2i1-1", t.i2 >= t.b1 + 2 * t.i1 - 1},
          {"d:b2+i2<=2b1+6i1+7", t.b2 + t.i2 <= 2 * t.b1 + 6 * t.i1 + 7}}},
    };
    TupleVerdict verdict;
    for (const auto& [label, clauses] : conditions) {
        if (std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.ok; })) {
            verdict.condition = label;
            verdict.violated_inequalities.clear();
            return verdict;
        }
        for (const auto& c : clauses)
            if (!c.ok) verdict.violated_inequalities.emplace_back(c.id);
    }
    return verdict;
}

/// Boundary/interior pairs realized by lattice polygons.
inline bool scott_check(std::int64_t b, std::int64_t i) {
    if (b < 3 || i < 0) return false;
    return i == 0 || (i == 1 && b == 9) || b <= 2 * i + 6;
}

/// (b(P), b(2P), i(2P)) admissible for an infinitely growable denominator-2 polygon.
inline bool inf_growable_tuple_check(std::int64_t b1, std::int64_t b2, std::int64_t i2) {
    if (b1 < 0 || b2 < 0 || i2 < 0) return false;
    const auto lower = std::max<std::int64_t>(3, 2 * b1);
    if (i2 == 0) return b2 >= lower;
    if (b1 == 0) return b2 == 4;
    return lower <= b2 && b2 <= 2 * b1 + 4 && b2 <= 2 * i2 + 6;
}

}  // namespace ratpoly
