#include "ekr/indep.hpp"

#include <stdexcept>
#include <vector>

namespace ekr {

namespace {

void enumerate_rec(const Graph& g, int next, int remaining, VertexSet chosen, VertexSet blocked,
                   std::vector<VertexSet>& out) {
    if (remaining == 0) {
        out.push_back(chosen);
        return;
    }
    for (int v = next; v <= g.vertex_count - remaining; ++v) {
        if (blocked.test(v)) continue;
        VertexSet c = chosen;
        c.set(v);
        enumerate_rec(g, v + 1, remaining - 1, c, blocked | g.adjacency[static_cast<std::size_t>(v)],
                      out);
    }
}

}  // namespace

Family enumerate_independent(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("set size must be nonnegative");
    std::vector<VertexSet> out;
    if (r <= g.alpha()) enumerate_rec(g, 0, r, VertexSet{}, VertexSet{}, out);
    return Family(r, std::move(out));
}

Family enumerate_stratum(const Graph& g, int r, int s) {
    if (s < 0 || s > r) throw std::invalid_argument("centre count must satisfy 0 <= s <= r");
    const Family all = enumerate_independent(g, r);
    std::vector<VertexSet> out;
    for (const auto& m : all.members())
        if ((m & g.centres).count() == s) out.push_back(m);
    return Family(r, std::move(out));
}

Int stratum_count(int n, int r, int s) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (s < 0 || s > r || r > 2 * n)
        throw std::invalid_argument("stratum parameters must satisfy 0 <= s <= r <= 2n");
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(s)) *
           binomial(static_cast<unsigned long>(2 * n - 2 * s), static_cast<unsigned long>(r - s));
}

Family star(const Graph& g, int v, int r) {
    g.check_vertex(v);
    const Family all = enumerate_independent(g, r);
    std::vector<VertexSet> out;
    for (const auto& m : all.members())
        if (m.test(v)) out.push_back(m);
    return Family(r, std::move(out));
}

Family random_intersecting_family(const Graph& g, int r, int target_size, Rng& rng) {
    const Family all = enumerate_independent(g, r);
    std::vector<std::size_t> order(static_cast<std::size_t>(all.size()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[uniform_below(rng, i)]);

    std::vector<VertexSet> chosen;
    for (const std::size_t idx : order) {
        const VertexSet& cand = all[static_cast<int>(idx)];
        bool ok = !cand.empty();
        for (const auto& m : chosen)
            if (!cand.intersects(m)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(cand);
        if (target_size > 0 && static_cast<int>(chosen.size()) == target_size) break;
    }
    return Family(r, std::move(chosen));
}

Int star_size_formula(int n, int r) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (r < 1 || r > 2 * n) throw std::invalid_argument("set size must satisfy 1 <= r <= 2n");
    Int total = 0;
    for (int s = 0; s < r; ++s) {
        if (s > n - 1 || r - s - 1 > 2 * n - 2 * s - 1) continue;
        total += binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(s)) *
                 binomial(static_cast<unsigned long>(2 * n - 2 * s - 1),
                          static_cast<unsigned long>(r - s - 1));
    }
    return total;
}

SetType classify_type(const Graph& g, const VertexSet& a) {
    if (g.k != 2) throw std::invalid_argument("type classification requires a union of paths");
    if (!is_independent(g, a)) throw std::invalid_argument("set must be independent");
    const SiblingProfile p = sibling_profile(g, a);
    if (p.k2 == 0) return SetType::TypeI;
    if (p.k1 == 2 * p.k2) return SetType::TypeII;
    return SetType::TypeIII;
}

SiblingProfile sibling_profile(const Graph& g, const VertexSet& k) {
    if (g.k != 2) throw std::invalid_argument("sibling profile requires a union of paths");
    k.for_each([&](int v) { g.check_vertex(v); });
    SiblingProfile p;
    p.k1 = (k & g.leaves).count();
    for (int i = 1; i <= g.n; ++i)
        if (k.test(g.x(i)) && k.test(g.z(i))) ++p.k2;
    return p;
}

}  // namespace ekr
