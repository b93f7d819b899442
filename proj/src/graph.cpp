#include "ekr/graph.hpp"

#include <stdexcept>
#include <string>

namespace ekr {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count) throw std::invalid_argument("vertex id out of range");
}

void Graph::check_component(int i) const {
    if (i < 1 || i > n) throw std::invalid_argument("component index out of range");
}

int Graph::leaf(int i, int j) const {
    check_component(i);
    if (j < 1 || j > k) throw std::invalid_argument("leaf index out of range");
    return (j - 1) * n + i - 1;
}

std::string Graph::vertex_name(int v) const {
    check_vertex(v);
    const int comp = component_of[static_cast<std::size_t>(v)];
    if (kind == GraphKind::P3Union) {
        if (v < n) return "x" + std::to_string(comp);
        if (v < 2 * n) return "z" + std::to_string(comp);
        return "y" + std::to_string(comp);
    }
    if (is_centre(v)) return "c" + std::to_string(comp);
    const int j = v / n + 1;
    return "a" + std::to_string(comp) + "_" + std::to_string(j);
}

namespace {

Graph build_leaf_centre_union(GraphKind kind, int n, int k) {
    if (n < 1) throw std::invalid_argument("component count must be positive");
    Graph g;
    g.kind = kind;
    g.n = n;
    g.k = k;
    g.vertex_count = (k + 1) * n;
    if (g.vertex_count > VertexSet::capacity)
        throw std::invalid_argument("graph exceeds supported vertex capacity");
    g.adjacency.assign(static_cast<std::size_t>(g.vertex_count), VertexSet{});
    g.roles.assign(static_cast<std::size_t>(g.vertex_count), Role::Leaf);
    g.component_of.assign(static_cast<std::size_t>(g.vertex_count), 0);
    for (int i = 1; i <= n; ++i) {
        const int c = k * n + i - 1;
        g.roles[static_cast<std::size_t>(c)] = Role::Centre;
        g.component_of[static_cast<std::size_t>(c)] = i;
        g.centres.set(c);
        for (int j = 1; j <= k; ++j) {
            const int l = (j - 1) * n + i - 1;
            g.component_of[static_cast<std::size_t>(l)] = i;
            g.leaves.set(l);
            g.adjacency[static_cast<std::size_t>(l)].set(c);
            g.adjacency[static_cast<std::size_t>(c)].set(l);
        }
    }
    return g;
}

}  // namespace

Graph build_p3_union(int n) { return build_leaf_centre_union(GraphKind::P3Union, n, 2); }

Graph build_kclaw_union(int n, int k) {
    if (k < 2) throw std::invalid_argument("claw size must be at least 2");
    return build_leaf_centre_union(GraphKind::KClawUnion, n, k);
}

int sibling(const Graph& g, int v) {
    if (g.k != 2) throw std::invalid_argument("sibling requires components with exactly two leaves");
    g.check_vertex(v);
    if (!g.is_leaf(v)) throw std::invalid_argument("sibling requires a leaf vertex");
    return v < g.n ? v + g.n : v - g.n;
}

int zeta(const Graph& g, int l) {
    g.check_vertex(l);
    if (!g.is_leaf(l)) throw std::invalid_argument("zeta requires a leaf vertex");
    return g.k * g.n + g.component_of[static_cast<std::size_t>(l)] - 1;
}

bool is_independent(const Graph& g, const VertexSet& a) {
    bool ok = true;
    a.for_each([&](int v) {
        if (v >= g.vertex_count) {
            ok = false;
            return;
        }
        if (g.adjacency[static_cast<std::size_t>(v)].intersects(a)) ok = false;
    });
    return ok;
}

}  // namespace ekr
