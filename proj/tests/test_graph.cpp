#include "ekr/graph.hpp"
#include "ekr/vertex_set.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace ekr;

TEST_CASE("vertex layout of a union of paths") {
    const Graph g = build_p3_union(3);
    CHECK(g.vertex_count == 9);
    CHECK(g.n == 3);
    CHECK(g.k == 2);
    // x_i = i - 1, z_i = n + i - 1, y_i = 2n + i - 1.
    CHECK(g.x(1) == 0);
    CHECK(g.x(3) == 2);
    CHECK(g.z(1) == 3);
    CHECK(g.z(3) == 5);
    CHECK(g.y(1) == 6);
    CHECK(g.y(3) == 8);
    for (int i = 1; i <= 3; ++i) {
        CHECK(g.component_of[static_cast<std::size_t>(g.x(i))] == i);
        CHECK(g.component_of[static_cast<std::size_t>(g.z(i))] == i);
        CHECK(g.component_of[static_cast<std::size_t>(g.y(i))] == i);
    }
    CHECK(g.leaves.count() == 6);
    CHECK(g.centres.count() == 3);
    CHECK(g.alpha() == 6);
}

TEST_CASE("path adjacency is exactly leaf-centre") {
    const Graph g = build_p3_union(2);
    CHECK(g.vertex_count == 6);
    for (int i = 1; i <= 2; ++i) {
        CHECK(g.adjacency[static_cast<std::size_t>(g.x(i))].test(g.y(i)));
        CHECK(g.adjacency[static_cast<std::size_t>(g.z(i))].test(g.y(i)));
        CHECK(g.adjacency[static_cast<std::size_t>(g.y(i))].test(g.x(i)));
        CHECK(g.adjacency[static_cast<std::size_t>(g.y(i))].test(g.z(i)));
        // The two leaves of one path are not adjacent.
        CHECK(!g.adjacency[static_cast<std::size_t>(g.x(i))].test(g.z(i)));
    }
    // Nothing joins distinct components.
    CHECK(!g.adjacency[static_cast<std::size_t>(g.x(1))].test(g.y(2)));
    CHECK(!g.adjacency[static_cast<std::size_t>(g.y(1))].test(g.y(2)));
    CHECK(g.adjacency[static_cast<std::size_t>(g.y(1))].count() == 2);
    CHECK(g.adjacency[static_cast<std::size_t>(g.x(1))].count() == 1);
}

TEST_CASE("vertex names") {
    const Graph g = build_p3_union(2);
    CHECK(g.vertex_name(g.x(1)) == "x1");
    CHECK(g.vertex_name(g.z(2)) == "z2");
    CHECK(g.vertex_name(g.y(1)) == "y1");

    const Graph claws = build_kclaw_union(2, 3);
    CHECK(claws.vertex_name(claws.leaf(1, 1)) == "a1_1");
    CHECK(claws.vertex_name(claws.leaf(1, 2)) == "a1_2");
    CHECK(claws.vertex_name(claws.leaf(2, 3)) == "a2_3");
    CHECK(claws.vertex_name(claws.centre(1)) == "c1");
}

TEST_CASE("claw layout and independence number") {
    const Graph g = build_kclaw_union(2, 3);
    CHECK(g.vertex_count == 8);
    CHECK(g.alpha() == 6);  // all leaves
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) {
            const int l = g.leaf(i, j);
            CHECK(l == (j - 1) * 2 + i - 1);
            CHECK(g.is_leaf(l));
            CHECK(g.component_of[static_cast<std::size_t>(l)] == i);
            CHECK(g.adjacency[static_cast<std::size_t>(l)] == VertexSet{g.centre(i)});
        }
    CHECK(g.adjacency[static_cast<std::size_t>(g.centre(1))].count() == 3);
    CHECK_THROWS_AS(build_kclaw_union(2, 1), std::invalid_argument);
}

TEST_CASE("two-leaf claws coincide with paths") {
    const Graph paths = build_p3_union(3);
    const Graph claws = build_kclaw_union(3, 2);
    CHECK(claws.vertex_count == paths.vertex_count);
    CHECK(claws.adjacency == paths.adjacency);
    CHECK(claws.leaves == paths.leaves);
    CHECK(claws.centres == paths.centres);
}

TEST_CASE("sibling and centre maps") {
    const Graph g = build_p3_union(3);
    CHECK(sibling(g, g.x(2)) == g.z(2));
    CHECK(sibling(g, g.z(2)) == g.x(2));
    CHECK(zeta(g, g.x(2)) == g.y(2));
    CHECK(zeta(g, g.z(3)) == g.y(3));
    CHECK_THROWS_AS(sibling(g, g.y(1)), std::invalid_argument);
    CHECK_THROWS_AS(zeta(g, g.y(1)), std::invalid_argument);

    const Graph claws = build_kclaw_union(2, 3);
    CHECK(zeta(claws, claws.leaf(1, 3)) == claws.centre(1));
    CHECK_THROWS_AS(sibling(claws, claws.leaf(1, 1)), std::invalid_argument);
}

TEST_CASE("independence test") {
    const Graph g = build_p3_union(2);
    CHECK(is_independent(g, VertexSet{}));
    CHECK(is_independent(g, VertexSet{g.x(1), g.z(1)}));
    CHECK(is_independent(g, VertexSet{g.y(1), g.y(2)}));
    CHECK(!is_independent(g, VertexSet{g.x(1), g.y(1)}));
    CHECK(!is_independent(g, VertexSet{g.z(2), g.y(2), g.x(1)}));
    // Bits beyond the vertex range never count as independent.
    VertexSet out_of_range;
    out_of_range.set(100);
    CHECK(!is_independent(g, out_of_range));
}

TEST_CASE("validation throws") {
    CHECK_THROWS_AS(build_p3_union(0), std::invalid_argument);
    CHECK_THROWS_AS(build_p3_union(100), std::invalid_argument);  // 300 > capacity
    const Graph g = build_p3_union(2);
    CHECK_THROWS_AS(g.x(0), std::invalid_argument);
    CHECK_THROWS_AS(g.x(3), std::invalid_argument);
    CHECK_THROWS_AS(g.leaf(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.vertex_name(-1), std::invalid_argument);
    CHECK_THROWS_AS(g.vertex_name(6), std::invalid_argument);
}
