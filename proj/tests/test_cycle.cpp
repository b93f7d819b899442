#include "ekr/cycle.hpp"

#include "ekr/graph.hpp"
#include "ekr/indep.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace ekr;

namespace {

// Leaf labels 1..2n name vertex ids label - 1.
VertexSet labels(const std::vector<int>& ls) {
    VertexSet out;
    for (const int l : ls) out.set(l - 1);
    return out;
}

// The six-leaf worked arrangement; not good (sibling 3/6 sits at distance 2).
const std::vector<int> six_leaf_order{3, 5, 6, 1, 2, 4};

// The 36-leaf worked arrangement; every sibling pair is diametrically opposite.
const std::vector<int> long_order{5,  8,  21, 6,  20, 1,  11, 14, 36, 22, 10, 34,
                                  30, 27, 7,  15, 31, 17, 23, 26, 3,  24, 2,  19,
                                  29, 32, 18, 4,  28, 16, 12, 9,  25, 33, 13, 35};

}  // namespace

TEST_CASE("circle positions and sibling labels") {
    CHECK(mod_position(1, 6) == 1);
    CHECK(mod_position(6, 6) == 6);
    CHECK(mod_position(7, 6) == 1);
    CHECK(mod_position(0, 6) == 6);
    CHECK(mod_position(-5, 6) == 1);
    CHECK(mod_position(13, 6) == 1);
    CHECK_THROWS_AS(mod_position(1, 0), std::invalid_argument);

    CHECK(sibling_label(1, 3) == 4);
    CHECK(sibling_label(4, 3) == 1);
    CHECK(sibling_label(3, 3) == 6);
    CHECK(sibling_label(6, 3) == 3);
    CHECK_THROWS_AS(sibling_label(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(sibling_label(7, 3), std::invalid_argument);
}

TEST_CASE("leaf permutation basics") {
    const LeafPermutation id = LeafPermutation::identity(3);
    CHECK(id.order() == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(id.n() == 3);
    CHECK(id.size() == 6);

    const LeafPermutation sigma(3, six_leaf_order);
    CHECK(sigma.at(1) == 3);
    CHECK(sigma.at(6) == 4);
    CHECK(sigma.at(7) == 3);   // wraps forward
    CHECK(sigma.at(0) == 4);   // wraps backward
    CHECK(sigma.at(-5) == 3);

    for (int j = 0; j <= 12; ++j) {
        const LeafPermutation turned = sigma.rotated(j);
        for (int p = 1; p <= 6; ++p) CHECK(turned.at(p) == sigma.at(p + j));
    }

    CHECK_THROWS_AS(LeafPermutation(3, {1, 2, 3, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(LeafPermutation(3, {1, 2, 3, 4, 5, 5}), std::invalid_argument);
    CHECK_THROWS_AS(LeafPermutation(3, {1, 2, 3, 4, 5, 7}), std::invalid_argument);
    CHECK_THROWS_AS(LeafPermutation(3, {0, 1, 2, 3, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(LeafPermutation(0, {}), std::invalid_argument);
}

TEST_CASE("rotations reproduce the six-leaf worked example") {
    const LeafPermutation sigma(3, six_leaf_order);
    CHECK(!sigma.good());

    const std::vector<int> m{1, 4, 5};
    CHECK(sigma.rotate(m, 0) == labels({3, 1, 2}));
    CHECK(sigma.rotate(m, 1) == labels({5, 2, 4}));
    CHECK(sigma.rotate(m, 3) == labels({1, 3, 5}));
    CHECK(sigma.rotate(m, 6) == sigma.rotate(m, 0));
    CHECK(sigma.rotate(m, -3) == sigma.rotate(m, 3));

    CHECK(LeafPermutation::identity(3).rotate(m, 0) == labels({1, 4, 5}));
    CHECK_THROWS_AS(sigma.rotate({0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sigma.rotate({7}, 1), std::invalid_argument);
}

TEST_CASE("goodness of arrangements") {
    for (int n = 1; n <= 4; ++n) CHECK(LeafPermutation::identity(n).good());

    const Graph g = build_p3_union(2);
    CHECK(is_good(g, {1, 2, 3, 4}));
    CHECK(!is_good(g, {1, 3, 2, 4}));  // sibling pair 1/3 adjacent, not opposite
    CHECK(!is_good(build_p3_union(3), six_leaf_order));
    CHECK_THROWS_AS(is_good(build_kclaw_union(2, 3), {1, 2, 3, 4, 5, 6}),
                    std::invalid_argument);

    CHECK_THROWS_AS(GoodPermutation(LeafPermutation(3, six_leaf_order)),
                    std::invalid_argument);
    const GoodPermutation id = GoodPermutation::identity(3);
    for (int j = 0; j <= 6; ++j) CHECK(id.perm().rotated(j).good());
}

TEST_CASE("construction from path order and orientations") {
    const GoodPermutation built = GoodPermutation::from_parts({2, 1}, {false, true});
    CHECK(built.perm().order() == std::vector<int>{2, 3, 4, 1});
    CHECK(built.perm().good());
    CHECK(GoodPermutation::from_parts({1, 2, 3}, {false, false, false}) ==
          GoodPermutation::identity(3));

    CHECK_THROWS_AS(GoodPermutation::from_parts({1, 1}, {false, false}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GoodPermutation::from_parts({1, 2}, {false}), std::invalid_argument);
    CHECK_THROWS_AS(GoodPermutation::from_parts({0, 1}, {false, false}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GoodPermutation::from_parts({}, {}), std::invalid_argument);
}

TEST_CASE("enumerating good arrangements") {
    CHECK(enumerate_good(1).size() == 2);
    CHECK(enumerate_good(2).size() == 8);
    CHECK(enumerate_good(3).size() == 48);
    for (int n = 1; n <= 5; ++n) {
        const auto all = enumerate_good(n);
        CHECK(Int(static_cast<long>(all.size())) == count_good(n));
        std::set<std::vector<int>> orders;
        for (const auto& sigma : all) {
            CHECK(sigma.perm().good());
            orders.insert(sigma.perm().order());
        }
        CHECK(orders.size() == all.size());
    }

    // Independent oracle at n = 2: filter all 4! arrangements directly.
    std::set<std::vector<int>> brute;
    std::vector<int> order{1, 2, 3, 4};
    do {
        if (LeafPermutation(2, order).good()) brute.insert(order);
    } while (std::next_permutation(order.begin(), order.end()));
    std::set<std::vector<int>> fast;
    for (const auto& sigma : enumerate_good(2)) fast.insert(sigma.perm().order());
    CHECK(brute == fast);

    CHECK(count_good(6) == Int(46080));
    CHECK_THROWS_AS(enumerate_good(7), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_good(0), std::invalid_argument);
}

TEST_CASE("random good arrangements") {
    Rng rng(default_seed);
    for (int trial = 0; trial < 50; ++trial) CHECK(random_good(5, rng).perm().good());

    Rng a(7), b(7);
    for (int trial = 0; trial < 10; ++trial) CHECK(random_good(4, a) == random_good(4, b));
    CHECK_THROWS_AS(random_good(0, rng), std::invalid_argument);
}

TEST_CASE("interval patterns") {
    const CyclePattern c1(18, 2, 6, 3, 1);
    CHECK(c1.s_positions() == std::vector<int>{1, 2});
    CHECK(c1.c_positions() == std::vector<int>{3, 4, 5, 6, 7, 8, 21, 22, 23});
    CHECK(c1.leaf_count() == 9);
    CHECK(c1.pair_count() == 3);

    const CyclePattern c2 = c1.complement();
    CHECK(c2.side == 2);
    CHECK(c2.s_positions() == c1.s_positions());
    CHECK(c2.c_positions() == std::vector<int>{9, 10, 11, 24, 25, 26, 27, 28, 29});
    CHECK(c2.pair_count() == 3);
    CHECK(c2.complement() == c1);

    // S, C_1 and C_2 never overlap on the circle.
    for (const auto& p : {CyclePattern(6, 1, 2, 1, 1), CyclePattern(8, 0, 3, 3, 1),
                          CyclePattern(5, 2, 3, 0, 1)}) {
        std::vector<int> all = p.s_positions();
        for (const int c : p.c_positions()) all.push_back(mod_position(c, 2 * p.n));
        for (const int c : p.complement().c_positions())
            all.push_back(mod_position(c, 2 * p.n));
        std::set<int> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
    }

    CHECK(CyclePattern(6, 0, 4, 0, 1).pair_count() == 0);
    CHECK(CyclePattern(8, 0, 3, 3, 1).pair_count() == 3);

    CHECK_THROWS_AS(CyclePattern(6, 0, 2, 3, 1), std::invalid_argument);   // u > t
    CHECK_THROWS_AS(CyclePattern(6, 0, 0, 0, 1), std::invalid_argument);   // empty T
    CHECK_THROWS_AS(CyclePattern(6, 4, 2, 1, 1), std::invalid_argument);   // overlap
    CHECK_THROWS_AS(CyclePattern(6, 0, 2, 1, 3), std::invalid_argument);   // bad side
    CHECK_THROWS_AS(CyclePattern(6, -1, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(CyclePattern(0, 0, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("bound regimes") {
    CHECK(cycle_regime(3, 2, 0) == 1);
    CHECK(cycle_regime(4, 4, 0) == 1);
    CHECK(cycle_regime(4, 2, 2) == 2);
    CHECK(cycle_regime(2, 1, 1) == 2);
    CHECK(cycle_regime(6, 2, 1) == 3);
    CHECK(cycle_regime(8, 3, 1) == 3);

    CHECK_THROWS_AS(cycle_regime(2, 3, 0), std::invalid_argument);  // n < t
    CHECK_THROWS_AS(cycle_regime(3, 2, 2), std::invalid_argument);  // n < 2t
    CHECK_THROWS_AS(cycle_regime(4, 2, 1), std::invalid_argument);  // n < 2(t+u)
    CHECK_THROWS_AS(cycle_regime(6, 2, 3), std::invalid_argument);  // u > t
    CHECK_THROWS_AS(cycle_regime(6, 0, 0), std::invalid_argument);
}

TEST_CASE("cycle families") {
    const Graph g3 = build_p3_union(3);
    const CycleFamily f = build_cycle_family(GoodPermutation::identity(3), 2, 0);
    CHECK(f.members.size() == 12);
    CHECK(f.distinct.size() == 6);
    for (const auto& m : f.members) {
        CHECK(m.set.count() == 2);
        CHECK(is_independent(g3, m.set));
        for (int i = 1; i <= 3; ++i) CHECK(!m.set.test(g3.y(i)));
    }

    CHECK(build_cycle_family(GoodPermutation::identity(4), 2, 2).distinct.size() == 4);
    CHECK(build_cycle_family(GoodPermutation::identity(6), 2, 1).distinct.size() == 24);

    // Distinct-image counts depend only on the intervals, not the arrangement.
    Rng rng(default_seed);
    for (int trial = 0; trial < 5; ++trial) {
        CHECK(build_cycle_family(random_good(3, rng), 2, 0).distinct.size() == 6);
        CHECK(build_cycle_family(random_good(4, rng), 2, 2).distinct.size() == 4);
        CHECK(build_cycle_family(random_good(6, rng), 2, 1).distinct.size() == 24);
    }

    CHECK_THROWS_AS(build_cycle_family(GoodPermutation::identity(4), 2, 1),
                    std::invalid_argument);
}

TEST_CASE("the long worked arrangement") {
    const GoodPermutation sigma{LeafPermutation(18, long_order)};
    CHECK(sigma.perm().good());

    const CyclePattern c1(18, 2, 6, 3, 1);
    const CyclePattern c2 = c1.complement();
    const LeafPermutation& p = sigma.perm();

    CHECK(p.rotate(c1.c_positions(), 1) == labels({6, 20, 1, 11, 14, 36, 24, 2, 19}));
    CHECK(p.rotate(c2.c_positions(), 1) == labels({29, 32, 18, 4, 28, 16, 22, 10, 34}));
    CHECK(p.rotate(c1.c_positions(), 2) == labels({20, 1, 11, 14, 36, 22, 2, 19, 29}));
    CHECK(p.rotate(c2.c_positions(), 2) == labels({32, 18, 4, 28, 16, 12, 10, 34, 30}));
    CHECK(p.rotate(c1.c_positions(), 3) == labels({1, 11, 14, 36, 22, 10, 19, 29, 32}));
    CHECK(p.rotate(c2.c_positions(), 3) == labels({18, 4, 28, 16, 12, 9, 34, 30, 27}));
    CHECK(p.rotate(c1.c_positions(), 36) == labels({21, 6, 20, 1, 11, 14, 3, 24, 2}));
    CHECK(p.rotate(c2.c_positions(), 36) == labels({19, 29, 32, 18, 4, 28, 36, 22, 10}));
    CHECK(p.rotate(c1.c_positions(), 36) == p.rotate(c1.c_positions(), 0));

    // Every rotation of either side carries the expected sibling-pair count.
    const Graph g = build_p3_union(18);
    for (int j = 1; j <= 36; ++j) {
        CHECK(sibling_profile(g, p.rotate(c1.c_positions(), j)) == SiblingProfile{9, 3});
        CHECK(sibling_profile(g, p.rotate(c2.c_positions(), j)) == SiblingProfile{9, 3});
    }
}

TEST_CASE("exact subfamily search") {
    // Six arcs of two consecutive points on a six-point circle: at most two
    // arcs can pairwise meet.
    std::vector<VertexSet> arcs;
    for (int i = 0; i < 6; ++i) {
        VertexSet arc;
        arc.set(i);
        arc.set((i + 1) % 6);
        arcs.push_back(arc);
    }
    const Family arc_family(2, arcs);
    const MaxIntersecting best = max_intersecting_subfamily_exact(arc_family);
    CHECK(best.size == 2);
    CHECK(best.member_indices.size() == 2);
    CHECK(arc_family[best.member_indices[0]].intersects(arc_family[best.member_indices[1]]));
    CHECK(std::is_sorted(best.member_indices.begin(), best.member_indices.end()));

    CHECK(max_intersecting_subfamily_exact(Family(2, {VertexSet{0, 1}})).size == 1);
    CHECK(max_intersecting_subfamily_exact(Family(1, {VertexSet{0}, VertexSet{1}})).size == 1);
    CHECK(max_intersecting_subfamily_exact(Family()).size == 0);

    // More than 24 members exercises the branch-and-bound path.
    std::vector<VertexSet> singletons;
    for (int i = 0; i < 30; ++i) singletons.push_back(VertexSet{i});
    CHECK(max_intersecting_subfamily_exact(Family(1, singletons)).size == 1);

    std::vector<VertexSet> too_many;
    for (int i = 0; i < 65; ++i) too_many.push_back(VertexSet{i});
    CHECK_THROWS_AS(max_intersecting_subfamily_exact(Family(1, too_many)),
                    std::invalid_argument);
}

TEST_CASE("bound reports") {
    const CycleBoundReport r1 = verify_cycle_bound(3, 2, 0, GoodPermutation::identity(3));
    CHECK(r1.regime == 1);
    CHECK(r1.family_size == 6);
    CHECK(r1.expected_family_size == 6);
    CHECK(r1.max_intersecting == 2);
    CHECK(r1.bound == 2);
    CHECK(r1.sizes_ok);
    CHECK(r1.bound_ok);
    CHECK(r1.tight_ok);
    CHECK(r1.pairing_ok);
    CHECK(r1.pass);

    const CycleBoundReport r2 = verify_cycle_bound(4, 2, 2, GoodPermutation::identity(4));
    CHECK(r2.regime == 2);
    CHECK(r2.family_size == 4);
    CHECK(r2.expected_family_size == 4);
    CHECK(r2.bound == 2);
    CHECK(r2.pass);

    const CycleBoundReport r3 = verify_cycle_bound(6, 2, 1, GoodPermutation::identity(6));
    CHECK(r3.regime == 3);
    CHECK(r3.family_size == 24);
    CHECK(r3.expected_family_size == 24);
    CHECK(r3.bound == 6);
    CHECK(r3.pairing_ok);
    CHECK(r3.pass);

    // Regime 1 attains its bound exactly for every arrangement tried.
    Rng rng(default_seed);
    for (int n = 1; n <= 5; ++n)
        for (int t = 1; t <= n; ++t) {
            CHECK(verify_cycle_bound(n, t, 0, GoodPermutation::identity(n)).pass);
            for (int trial = 0; trial < 5; ++trial) {
                const CycleBoundReport r = verify_cycle_bound(n, t, 0, random_good(n, rng));
                CHECK(r.tight_ok);
                CHECK(r.pass);
            }
        }

    // Regime 3 keeps the antipodal pairing for random arrangements.
    for (int trial = 0; trial < 10; ++trial) {
        const CycleBoundReport r = verify_cycle_bound(6, 2, 1, random_good(6, rng));
        CHECK(r.pairing_ok);
        CHECK(r.pass);
    }

    CHECK_THROWS_AS(verify_cycle_bound(4, 2, 1, GoodPermutation::identity(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_cycle_bound(4, 2, 0, GoodPermutation::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("threaded verification") {
    Rng rng(default_seed);
    std::vector<GoodPermutation> sigmas;
    for (int i = 0; i < 8; ++i) sigmas.push_back(random_good(6, rng));

    const auto serial = verify_cycle_bound_many(6, 2, 1, sigmas, 1);
    const auto parallel = verify_cycle_bound_many(6, 2, 1, sigmas, 4);
    REQUIRE(serial.size() == sigmas.size());
    REQUIRE(parallel.size() == sigmas.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        CHECK(serial[i].family_size == parallel[i].family_size);
        CHECK(serial[i].max_intersecting == parallel[i].max_intersecting);
        CHECK(serial[i].pass == parallel[i].pass);
        const CycleBoundReport direct = verify_cycle_bound(6, 2, 1, sigmas[i]);
        CHECK(serial[i].family_size == direct.family_size);
        CHECK(serial[i].max_intersecting == direct.max_intersecting);
    }
    CHECK(verify_cycle_bound_many(6, 2, 1, {}, 4).empty());
}
