// Structured graphs: vertex-disjoint unions of length-2 paths and of k-claws.
//
// Vertex ids are 0-based internally; reports print them 1-based. For a union
// of n length-2 paths the leaves occupy ids [0, 2n) so that (1-based) x_i = i
// and z_i = n + i, and centre y_i = 2n + i. A k-claw union puts leaf j of
// component i at (j-1)n + i - 1 and the centre of component i at kn + i - 1,
// which coincides with the path layout when k = 2.
#pragma once

#include "ekr/vertex_set.hpp"

#include <string>
#include <vector>

namespace ekr {

enum class GraphKind { P3Union, KClawUnion };

enum class Role { Leaf, Centre };

struct Graph {
    GraphKind kind = GraphKind::P3Union;
    int n = 0;  // number of components
    int k = 2;  // leaves per component (2 for P3Union)
    int vertex_count = 0;
    std::vector<VertexSet> adjacency;
    std::vector<Role> roles;
    std::vector<int> component_of;  // 1-based component index per vertex
    VertexSet leaves;               // L
    VertexSet centres;              // Y

    // 1-based component accessors.
    int x(int i) const { return check_component(i), i - 1; }
    int z(int i) const { return check_component(i), n + i - 1; }
    int y(int i) const { return check_component(i), k * n + i - 1; }
    int leaf(int i, int j) const;    // leaf j ∈ [1, k] of component i
    int centre(int i) const { return y(i); }

    bool is_leaf(int v) const { return check_vertex(v), roles[static_cast<std::size_t>(v)] == Role::Leaf; }
    bool is_centre(int v) const { return !is_leaf(v); }

    // Independence number: all leaves, kn of them.
    int alpha() const { return k * n; }

    int leaf_count() const { return k * n; }

    // "x1", "y2", "z1" for paths; "a1_2" / "c1" for claws.
    std::string vertex_name(int v) const;

    void check_vertex(int v) const;
    void check_component(int i) const;
};

Graph build_p3_union(int n);
Graph build_kclaw_union(int n, int k);

// The other leaf on v's path. Only defined when components are paths (k = 2).
int sibling(const Graph& g, int v);

// The unique centre adjacent to leaf l.
int zeta(const Graph& g, int l);

bool is_independent(const Graph& g, const VertexSet& a);

}  // namespace ekr
