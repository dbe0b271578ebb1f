#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <random>
#include <set>

#include "support/oracles.hpp"

using namespace ratpoly;
using oracle::I;
using Pt = ScaledPoint<I>;

namespace {

RationalPolygon<I> T21() { return make_polygon(2, {{0, 0}, {1, 0}, {0, 1}}); }

std::set<CanonicalKey<I>> keys_of(const std::vector<RationalPolygon<I>>& ps) {
    std::set<CanonicalKey<I>> out;
    for (const auto& p : ps) out.insert(canonical_form(p));
    return out;
}

/// Candidates on the line one step beyond `edge`, found by scanning the line
/// and testing x1, x2 against freshly built hulls.
std::vector<Pt> brute_candidates(const RationalPolygon<I>& p, std::size_t edge, bool lattice_too, I span = 40) {
    const auto a = p.vertex(edge), b = p.vertex(edge + 1);
    const I g = std::gcd(b.x - a.x, b.y - a.y);
    const Pt d{(b.x - a.x) / g, (b.y - a.y) / g};
    const Pt x1{b.x + d.x, b.y + d.y}, x2{a.x - d.x, a.y - d.y};
    // some point on the adjacent line: u.z = u.a + 1 with u = (d.y, -d.x)
    std::vector<Pt> out;
    const I r = p.denominator();
    for (I x = -span; x <= span; ++x)
        for (I y = -span; y <= span; ++y) {
            const Pt v{x, y};
            if (d.y * (x - a.x) - d.x * (y - a.y) != 1) continue;
            if (!lattice_too && x % r == 0 && y % r == 0) continue;
            auto pts = oracle::verts(p);
            pts.push_back(v);
            const auto h = oracle::jarvis(pts);
            if (oracle::inside(h, x1) || oracle::inside(h, x2)) continue;
            out.push_back(v);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pt> sorted(std::vector<Pt> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// Exhaustive slab test over dual vectors in a box.
bool brute_infinitely_growable(const RationalPolygon<I>& p, I bound = 12) {
    const I r = p.denominator();
    for (I a = -bound; a <= bound; ++a)
        for (I b = 0; b <= bound; ++b) {
            if (std::gcd(a, b) != 1) continue;
            I lo = 0, hi = 0;
            bool first = true;
            for (const auto& v : p.vertices()) {
                const I t = a * v.x + b * v.y;
                if (first) lo = hi = t, first = false;
                lo = std::min(lo, t), hi = std::max(hi, t);
            }
            // some integer c with c*r <= lo and hi <= (c+1)*r
            for (I c = lo / r - 2; c <= lo / r + 2; ++c)
                if (c * r <= lo && hi <= (c + 1) * r) return true;
        }
    return false;
}

/// Largest number of (1/r)-points of P on one line with non-integral offset,
/// by checking all pairs.
std::size_t max_nonintegral_collinear(const RationalPolygon<I>& p) {
    const auto pts = scaled_points(p);
    const I r = p.denominator();
    std::size_t best = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const I dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y, g = std::gcd(dx, dy);
            const I ua = dy / g, ub = -dx / g;
            const I c = ua * pts[i].x + ub * pts[i].y;
            if (c % r == 0) continue;
            std::size_t n = 0;
            for (const auto& q : pts)
                if (ua * q.x + ub * q.y == c) ++n;
            best = std::max(best, n);
        }
    return best;
}

}  // namespace

TEST(MinimalSizeZero, Examples) {
    auto two = minimal_size_zero(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_TRUE(equivalent(two[0], make_polygon(2, {{1, 1}, {2, 1}, {1, 2}})));
    EXPECT_EQ(size_zero_triples(2), (std::vector<std::array<I, 3>>{{1, 1, 1}}));

    EXPECT_EQ(minimal_size_zero(3).size(), 2u);
    EXPECT_EQ(size_zero_triples(3), (std::vector<std::array<I, 3>>{{0, 1, 1}, {1, 2, 2}}));

    EXPECT_TRUE(size_zero_triples(1).empty());
}

TEST(MinimalSizeZero, TripleBijectionMatchesDirectScan) {
    for (I r = 2; r <= 6; ++r) {
        const auto a = keys_of(minimal_size_zero(r));
        const auto b = keys_of(minimal_size_zero_by_scan(r));
        EXPECT_EQ(a, b) << "r=" << r;
        EXPECT_EQ(a.size(), minimal_size_zero(r).size()) << "r=" << r;
        for (const auto& p : minimal_size_zero(r)) EXPECT_EQ(oracle::ehrhart(p, 1), 0);
    }
}

TEST(LatticePolygons, CountsBySize) {
    EXPECT_EQ(lattice_polygons_of_size(3).size(), 1u);
    EXPECT_EQ(lattice_polygons_of_size(4).size(), 3u);
    EXPECT_EQ(lattice_polygons_of_size(5).size(), 6u);
}

TEST(LatticePolygons, MembersHaveRequestedSizeAndDistinctClasses) {
    for (I k = 3; k <= 7; ++k) {
        const auto ps = lattice_polygons_of_size(k);
        for (const auto& p : ps) EXPECT_EQ(oracle::ehrhart(p, 1), k);
        EXPECT_EQ(keys_of(ps).size(), ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                if (ps[i].vertex_count() == ps[j].vertex_count()) {
                    EXPECT_FALSE(oracle::unimodular_witness(ps[i], ps[j], 3));
                }
    }
}

TEST(LatticePolygons, CompleteAgainstBoxSearch) {
    // every lattice polygon with at most 5 points has a representative in a
    // small box; hulls of all point subsets there must land in the list
    for (I k = 3; k <= 5; ++k) {
        const auto expected = keys_of(lattice_polygons_of_size(k));
        std::set<CanonicalKey<I>> found;
        std::vector<Pt> grid;
        for (I x = 0; x <= 3; ++x)
            for (I y = 0; y <= 2; ++y) grid.push_back({x, y});
        const std::size_t n = grid.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            if (std::popcount(mask) > 5) continue;
            std::vector<Pt> pts;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) pts.push_back(grid[i]);
            if (oracle::jarvis(pts).size() < 3) continue;
            auto p = make_polygon<I>(1, pts);
            if (oracle::ehrhart(p, 1) == k) found.insert(canonical_form(p));
        }
        EXPECT_EQ(found, expected) << "k=" << k;
    }
}

TEST(MinimalPolygons, Examples) {
    auto one = minimal_polygons(2, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(canonical_form(one[0]), canonical_form(T21()));

    auto two = minimal_polygons(2, 2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(canonical_form(two[0]), canonical_form(make_polygon(2, {{0, 0}, {2, 0}, {0, 1}})));

    auto three = minimal_polygons(2, 3);
    EXPECT_EQ(three.size(), 2u);
    EXPECT_EQ(keys_of(three), keys_of({make_polygon(2, {{0, 0}, {2, 0}, {0, 2}}), make_polygon(2, {{0, 0}, {4, 0}, {0, 1}})}));
    for (const auto& p : three) EXPECT_EQ(oracle::ehrhart(p, 1), 3);
}

TEST(GrowCandidates, TriangleTopFacet) {
    auto t = T21();
    // edge 0 runs (0,0) -> (1,0)
    auto c = facet_candidates(t, 0);
    EXPECT_EQ(c, (std::vector<Pt>{{-1, -1}, {0, -1}, {1, -1}, {2, -1}, {3, -1}}));
    EXPECT_EQ(c, brute_candidates(t, 0, false));

    // edge 2 runs (0,1) -> (0,0); mirror image under (x,y) -> (y,x)
    auto m = facet_candidates(t, 2);
    std::vector<Pt> mirrored;
    for (const auto& p : c) mirrored.push_back({p.y, p.x});
    std::sort(m.begin(), m.end());
    std::sort(mirrored.begin(), mirrored.end());
    EXPECT_EQ(m, mirrored);
}

TEST(GrowCandidates, UnitSquareBottomFacet) {
    auto sq = make_polygon(1, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto c = facet_candidates(sq, 0, LatticePointPolicy::include);
    EXPECT_EQ(c, (std::vector<Pt>{{-1, -1}, {0, -1}, {1, -1}, {2, -1}}));
    EXPECT_EQ(c, brute_candidates(sq, 0, true));
    EXPECT_TRUE(facet_candidates(sq, 0).empty());
    EXPECT_TRUE(grow_candidates(sq).empty());
}

TEST(GrowCandidates, MatchesBruteForceOnRandomPolygons) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 120; ++t) {
        auto p = oracle::random_polygon(rng, 1 + t % 3, -4, 4);
        for (std::size_t e = 0; e < p.vertex_count(); ++e) {
            // facet order follows the edge direction, the oracle sorts
            EXPECT_EQ(sorted(facet_candidates(p, e)), brute_candidates(p, e, false)) << p << " edge " << e;
            EXPECT_EQ(sorted(facet_candidates(p, e, LatticePointPolicy::include)), brute_candidates(p, e, true)) << p;
        }
    }
}

TEST(GrowStep, KeepsTriangleExample) {
    auto q = make_polygon(2, {{0, 0}, {3, -1}, {0, 1}});
    EXPECT_EQ(r_size(q), 4);
    EXPECT_EQ(oracle::r_size(q), 4);
    EXPECT_EQ(size(q), 1);
    // Pick on the scaled triangle: area 3/2, boundary 3, interior 1
    EXPECT_EQ(twice_area(q.vertices()), 3);
    EXPECT_EQ(boundary_point_count(q.vertices()), 3);

    auto g = grow_step(T21(), 1);
    std::set<CanonicalKey<I>> all;
    for (const auto* list : {&g.inf, &g.fin})
        for (const auto& c : *list) {
            all.insert(c.key);
            EXPECT_EQ(size(c.polygon), 1);
            EXPECT_EQ(r_size(c.polygon), 4);
            EXPECT_EQ(c.infinitely_growable, is_infinitely_growable(c.polygon));
        }
    EXPECT_TRUE(all.count(canonical_form(q)));
    EXPECT_EQ(all.size(), g.inf.size() + g.fin.size());
}

TEST(GrowStep, DropsPolygonsThatGainALatticePoint) {
    // T_{2,1} plus (2,0) = lattice point (1,0): size 2
    auto q = extend(T21(), Pt{2, 0});
    EXPECT_EQ(size(q), 2);
    auto g = grow_step(T21(), 1);
    for (const auto* list : {&g.inf, &g.fin})
        for (const auto& c : *list) EXPECT_NE(c.key, canonical_form(q));
}

TEST(GrowStep, LatticeTriangleHasNoCandidates) {
    auto g = grow_step(make_polygon(1, {{0, 0}, {1, 0}, {0, 1}}), 3);
    EXPECT_TRUE(g.inf.empty());
    EXPECT_TRUE(g.fin.empty());
}

TEST(InfinitelyGrowable, Examples) {
    EXPECT_TRUE(is_infinitely_growable(T21()));
    EXPECT_TRUE(is_infinitely_growable(make_polygon(2, {{1, 1}, {2, 1}, {1, 2}})));
    auto big = make_polygon(2, {{0, 0}, {3, 0}, {0, 3}});
    EXPECT_FALSE(is_infinitely_growable(big));
    EXPECT_FALSE(brute_infinitely_growable(big));
    EXPECT_THROW(is_infinitely_growable(make_polygon(1, {{0, 0}, {1, 0}, {0, 1}})), ContractError);
}

TEST(InfinitelyGrowable, MatchesExhaustiveSlabSearch) {
    std::mt19937_64 rng(17);
    int yes = 0;
    for (int t = 0; t < 300; ++t) {
        auto p = oracle::random_polygon(rng, 2 + t % 3, -4, 4, 5);
        const bool expect = brute_infinitely_growable(p);
        EXPECT_EQ(is_infinitely_growable(p), expect) << p;
        yes += expect;
    }
    EXPECT_GT(yes, 10);
}

TEST(CollinearBound, Examples) {
    auto line8 = make_polygon(2, {{0, 1}, {7, 1}, {0, 0}});
    EXPECT_EQ(max_nonintegral_collinear(line8), 8u);
    EXPECT_EQ(collinear_threshold<I>(2, 1, 0), I(4));
    EXPECT_FALSE(collinear_bound_ok(line8, 0));
    EXPECT_TRUE(collinear_bound_ok(T21(), 1));
    // the zero-interior rule: at most 8 points on a non-integral line
    EXPECT_FALSE(collinear_bound_ok(line8, 1));
    EXPECT_TRUE(collinear_bound_ok(line8, 2, I(8)));
    auto line9 = make_polygon(2, {{0, 1}, {8, 1}, {0, 0}});
    EXPECT_TRUE(collinear_bound_ok(line9, 2));
    EXPECT_FALSE(collinear_bound_ok(line9, 2, I(8)));
    EXPECT_FALSE(collinear_threshold<I>(2, 2, 0).has_value());
}

TEST(CollinearBound, ThresholdFormula) {
    // r(r - h + 1)(k + 1), h = min(c mod r, -c mod r)
    EXPECT_EQ(collinear_threshold<I>(3, 1, 0), I(3 * 3 * 1));
    EXPECT_EQ(collinear_threshold<I>(3, 2, 2), I(3 * 3 * 3));
    EXPECT_EQ(collinear_threshold<I>(4, 2, 1), I(4 * 3 * 2));
    EXPECT_EQ(collinear_threshold<I>(4, -1, 1), I(4 * 4 * 2));
}

TEST(CollinearBound, AgreesWithPairScan) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 150; ++t) {
        auto p = oracle::random_polygon(rng, 2, -5, 5, 5);
        const auto m = max_nonintegral_collinear(p);
        // at r = 2 every non-integral line has h = 1, threshold 2 * 2 * (k + 1)
        for (I k = 0; k <= 2; ++k) EXPECT_EQ(collinear_bound_ok(p, k), m < std::size_t(4 * (k + 1))) << p;
    }
}

TEST(Classify, SmallCellCounts) {
    EXPECT_EQ(classify(1, 3).size(), 1u);
    EXPECT_EQ(classify(1, 4).size(), 3u);
    EXPECT_EQ(classify(1, 5).size(), 6u);
    EXPECT_EQ(classify(2, 0).size(), 1u);
    EXPECT_EQ(classify(2, 1).size(), 106u);
    EXPECT_EQ(classify(3, 0).size(), 211u);
    EXPECT_THROW(classify(1, 2), ContractError);
    EXPECT_THROW(classify(0, 2), DomainError);
}

TEST(Classify, DatasetInvariants) {
    for (I k = 0; k <= 2; ++k) {
        const auto ds = classify(2, k);
        std::set<CanonicalKey<I>> keys;
        for (std::size_t i = 0; i < ds.polygons.size(); ++i) {
            const auto& e = ds.polygons[i];
            EXPECT_TRUE(keys.insert(e.key).second);
            EXPECT_EQ(e.polygon.denominator(), 2);
            EXPECT_EQ(oracle::ehrhart(e.polygon, 1), k);
            EXPECT_EQ(e.r_size, oracle::r_size(e.polygon));
            EXPECT_FALSE(is_infinitely_growable(e.polygon));
            EXPECT_EQ(canonical_form(e.polygon), e.key);
            EXPECT_LT(e.seed, ds.seeds.size());
            if (i > 0) {
                const auto& prev = ds.polygons[i - 1];
                EXPECT_TRUE(std::tie(prev.r_size, prev.key) < std::tie(e.r_size, e.key));
            }
        }
    }
}

TEST(Classify, DeterministicAcrossRunsAndThreads) {
    ClassifyOptions<I> one, four;
    one.threads = 1;
    four.threads = 4;
    const auto a = classify(2, 2, one), b = classify(2, 2, four), c = classify(2, 2, one);
    ASSERT_EQ(a.size(), 1333u);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a.polygons[i].key, b.polygons[i].key);
        EXPECT_EQ(a.polygons[i].polygon, b.polygons[i].polygon);
        EXPECT_EQ(a.polygons[i].seed, c.polygons[i].seed);
    }
    EXPECT_EQ(a.strata.size(), b.strata.size());
}

TEST(Classify, FrontiersKeepSizeAndGrowOnePointAtATime) {
    std::map<I, std::set<CanonicalKey<I>>> frontier;
    ClassifyOptions<I> opts;
    opts.on_stratum = [&](const GrowthFrontier<I>& f) {
        for (const auto* list : {&f.to_grow_inf, &f.to_grow_fin})
            for (const auto& n : *list) {
                EXPECT_EQ(size(n.polygon), 1);
                EXPECT_EQ(r_size(n.polygon), f.stratum_r_size);
                frontier[f.stratum_r_size].insert(n.key);
            }
        for (const auto& n : f.to_grow_inf) EXPECT_TRUE(is_infinitely_growable(n.polygon));
    };
    const auto ds = classify(2, 1, opts);

    // chain completeness: removing a suitable vertex lands in the stratum below
    std::mt19937_64 rng(50);
    std::vector<const DatasetEntry<I>*> pool;
    for (const auto& e : ds.polygons)
        if (e.r_size > 3) pool.push_back(&e);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<std::size_t>(pool.size(), 50));
    for (const auto* e : pool) {
        bool found = false;
        const auto pts = scaled_points(e->polygon);
        for (const auto& v : e->polygon.vertices()) {
            std::vector<Pt> rest;
            for (const auto& q : pts)
                if (!(q == v)) rest.push_back(q);
            if (oracle::jarvis(rest).size() < 3) continue;
            auto below = make_polygon<I>(2, rest);
            if (size(below) != 1) continue;
            EXPECT_EQ(r_size(below), e->r_size - 1);
            EXPECT_TRUE(contains(e->polygon, below.vertex(0)));
            if (frontier[e->r_size - 1].count(canonical_form(below))) found = true;
        }
        EXPECT_TRUE(found) << e->key;
    }
}

TEST(ClassifyZeroInterior, ClassificationAndTupleSet) {
    const auto ds = classify_zero_interior();
    EXPECT_EQ(ds.size(), 79u);
    std::set<std::array<I, 3>> tuples;
    std::set<CanonicalKey<I>> keys;
    for (const auto& e : ds.polygons) {
        const auto [b1, i1] = oracle::profile(e.polygon, 1);
        const auto [b2, i2] = oracle::profile(e.polygon, 2);
        EXPECT_EQ(i1, 0);
        EXPECT_FALSE(is_infinitely_growable(e.polygon));
        EXPECT_LE(max_nonintegral_collinear(e.polygon), 8u);
        tuples.insert({b1, b2, i2});
        keys.insert(e.key);
    }
    EXPECT_EQ(keys.size(), 79u);
    EXPECT_EQ(tuples, oracle::zero_interior_tuples());
    EXPECT_TRUE(keys.count(canonical_form(make_polygon(2, {{0, 0}, {4, 0}, {0, 4}}))));
}

TEST(ClassifyZeroInterior, AgreesWithGeneralClassificationBySize) {
    const auto zi = classify_zero_interior();
    for (I k = 0; k <= 4; ++k) {
        std::set<CanonicalKey<I>> a, b;
        for (const auto& e : classify(2, k).polygons)
            if (lattice_profile(e.polygon, 1).interior == 0) a.insert(e.key);
        for (const auto& e : zi.polygons)
            if (size(e.polygon) == k) b.insert(e.key);
        EXPECT_EQ(a, b) << "k=" << k;
    }
}
