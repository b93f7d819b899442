#include "ekr/search.hpp"

#include "ekr/indep.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace ekr {

namespace {

class Bits {
public:
    explicit Bits(int words) : w_(static_cast<std::size_t>(words), 0) {}

    void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= one << (i & 63); }
    void reset(int i) { w_[static_cast<std::size_t>(i >> 6)] &= ~(one << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    int lowest() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i])));
        return -1;
    }

    void and_row(const std::uint64_t* row) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= row[i];
    }

    void and_not_row(const std::uint64_t* row) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~row[i];
    }

private:
    static constexpr std::uint64_t one = 1;
    std::vector<std::uint64_t> w_;
};

}  // namespace

CompatibilityGraph::CompatibilityGraph(const std::vector<VertexSet>& sets) {
    VertexSet everything;
    for (int i = 0; i < VertexSet::capacity; ++i) everything.set(i);
    build(sets, everything);
}

CompatibilityGraph::CompatibilityGraph(const std::vector<VertexSet>& sets,
                                       const VertexSet& restrict_to) {
    build(sets, restrict_to);
}

void CompatibilityGraph::build(const std::vector<VertexSet>& sets, const VertexSet& restrict_to) {
    m_ = static_cast<int>(sets.size());
    words_ = (m_ + 63) / 64;
    adj_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(words_), 0);
    eligible_.assign(static_cast<std::size_t>(m_), 0);
    std::vector<VertexSet> cut(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        cut[i] = sets[i] & restrict_to;
        eligible_[i] = !cut[i].empty();
    }
    for (int a = 0; a < m_; ++a) {
        if (!eligible_[static_cast<std::size_t>(a)]) continue;
        for (int b = a + 1; b < m_; ++b) {
            if (!eligible_[static_cast<std::size_t>(b)]) continue;
            if (cut[static_cast<std::size_t>(a)].intersects(sets[static_cast<std::size_t>(b)])) {
                adj_[static_cast<std::size_t>(a) * static_cast<std::size_t>(words_) +
                     static_cast<std::size_t>(b >> 6)] |= std::uint64_t{1} << (b & 63);
                adj_[static_cast<std::size_t>(b) * static_cast<std::size_t>(words_) +
                     static_cast<std::size_t>(a >> 6)] |= std::uint64_t{1} << (a & 63);
            }
        }
    }
}

bool CompatibilityGraph::adjacent(int a, int b) const {
    return (adj_[static_cast<std::size_t>(a) * static_cast<std::size_t>(words_) +
                 static_cast<std::size_t>(b >> 6)] >>
            (b & 63)) &
           1;
}

namespace {

struct BranchBoundSolver {
    const CompatibilityGraph& g;
    int m;
    int words;
    std::vector<std::uint64_t> madj;  // adjacency permuted into search order
    std::vector<int> order;           // search position -> original vertex
    long long max_nodes;
    long long nodes = 0;
    int best = 0;
    std::vector<int> best_set;  // search positions
    std::vector<int> current;

    BranchBoundSolver(const CompatibilityGraph& graph, long long node_budget)
        : g(graph), m(graph.size()), words((m + 63) / 64), max_nodes(node_budget) {
        // Descending compatibility degree, index tie-break.
        std::vector<int> degree(static_cast<std::size_t>(m), 0);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b && g.adjacent(a, b)) ++degree[static_cast<std::size_t>(a)];
        order.resize(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
        });
        std::vector<int> position(static_cast<std::size_t>(m));
        for (int p = 0; p < m; ++p) position[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
        madj.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(words), 0);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b && g.adjacent(a, b)) {
                    const int pa = position[static_cast<std::size_t>(a)];
                    const int pb = position[static_cast<std::size_t>(b)];
                    madj[static_cast<std::size_t>(pa) * static_cast<std::size_t>(words) +
                         static_cast<std::size_t>(pb >> 6)] |= std::uint64_t{1} << (pb & 63);
                }
    }

    const std::uint64_t* row(int p) const {
        return madj.data() + static_cast<std::size_t>(p) * static_cast<std::size_t>(words);
    }

    void expand(Bits p) {
        if (++nodes > max_nodes) throw budget_error("clique search exceeded its node budget");
        if (!p.any()) {
            if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_set = current;
            }
            return;
        }
        // Greedy coloring; candidates emitted in ascending color classes.
        std::vector<std::pair<int, int>> colored;  // (position, color)
        Bits uncolored = p;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bits avail = uncolored;
            while (avail.any()) {
                const int v = avail.lowest();
                colored.emplace_back(v, color);
                uncolored.reset(v);
                avail.reset(v);
                avail.and_not_row(row(v));
            }
        }
        while (!colored.empty()) {
            const auto [v, c] = colored.back();
            colored.pop_back();
            if (static_cast<int>(current.size()) + c <= best) return;
            current.push_back(v);
            Bits next = p;
            next.and_row(row(v));
            expand(std::move(next));
            current.pop_back();
            p.reset(v);
        }
    }

    CliqueResult solve() {
        Bits p(words);
        for (int pos = 0; pos < m; ++pos)
            if (g.eligible(order[static_cast<std::size_t>(pos)])) p.set(pos);
        expand(std::move(p));
        CliqueResult result;
        result.size = best;
        result.nodes = nodes;
        for (int pos : best_set) result.members.push_back(order[static_cast<std::size_t>(pos)]);
        std::sort(result.members.begin(), result.members.end());
        return result;
    }
};

}  // namespace

CliqueResult CompatibilityGraph::max_clique(const SearchBudget& budget) const {
    BranchBoundSolver solver(*this, budget.max_nodes);
    return solver.solve();
}

CliqueResult CompatibilityGraph::max_clique_exhaustive() const {
    if (m_ > 24) throw std::invalid_argument("exhaustive clique scan limited to 24 members");
    const std::uint32_t full = m_ == 0 ? 0u : (1u << m_) - 1u;
    std::vector<std::uint32_t> neighbour(static_cast<std::size_t>(m_), 0);
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b)
            if (a != b && adjacent(a, b)) neighbour[static_cast<std::size_t>(a)] |= 1u << b;
    std::vector<char> clique(static_cast<std::size_t>(full) + 1, 0);
    clique[0] = 1;
    CliqueResult result;
    result.nodes = static_cast<long long>(full) + 1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int low = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        const bool ok = eligible_[static_cast<std::size_t>(low)] &&
                        clique[rest] && (rest & ~neighbour[static_cast<std::size_t>(low)]) == 0;
        clique[mask] = ok ? 1 : 0;
        if (ok && std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
    }
    result.size = std::popcount(best_mask);
    for (int v = 0; v < m_; ++v)
        if (best_mask & (1u << v)) result.members.push_back(v);
    return result;
}

MaxFamilyResult max_intersecting_family(const Graph& g, int r, SearchMode mode,
                                        const SearchBudget& budget) {
    if (mode == SearchMode::ShiftedReduced && g.k != 2)
        throw std::invalid_argument("reduced search requires a union of paths");
    const Family all = enumerate_independent(g, r);
    if (all.size() > budget.max_members)
        throw budget_error("independent family exceeds the member budget");
    const CompatibilityGraph compat =
        mode == SearchMode::Full ? CompatibilityGraph(all.members())
                                 : CompatibilityGraph(all.members(), g.leaves);
    const CliqueResult clique = compat.max_clique(budget);
    std::vector<VertexSet> witness;
    witness.reserve(clique.members.size());
    for (int idx : clique.members) witness.push_back(all[idx]);
    return {clique.size, Family(r, std::move(witness)), clique.nodes};
}

namespace {

// Star size at every vertex from one enumeration pass.
std::vector<long long> star_sizes(const Graph& g, const Family& all) {
    std::vector<long long> sizes(static_cast<std::size_t>(g.vertex_count), 0);
    for (const auto& m : all.members())
        m.for_each([&](int v) { ++sizes[static_cast<std::size_t>(v)]; });
    return sizes;
}

}  // namespace

EkrVerdict verify_ekr(const Graph& g, int r, SearchMode mode, const SearchBudget& budget) {
    const auto start = std::chrono::steady_clock::now();
    EkrVerdict verdict;
    verdict.kind = g.kind;
    verdict.n = g.n;
    verdict.k = g.k;
    verdict.r = r;
    verdict.reduced = mode == SearchMode::ShiftedReduced;

    const Family all = enumerate_independent(g, r);
    if (all.size() > budget.max_members)
        throw budget_error("independent family exceeds the member budget");
    const std::vector<long long> stars = star_sizes(g, all);
    verdict.best_star_all = 0;
    verdict.best_star_vertex = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (stars[static_cast<std::size_t>(v)] > verdict.best_star_all) {
            verdict.best_star_all = stars[static_cast<std::size_t>(v)];
            verdict.best_star_vertex = v;
        }
    verdict.leaf_star_maximal = false;
    long long best_leaf_star = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (g.is_leaf(v)) {
            best_leaf_star = std::max(best_leaf_star, stars[static_cast<std::size_t>(v)]);
            if (stars[static_cast<std::size_t>(v)] == verdict.best_star_all)
                verdict.leaf_star_maximal = true;
        }
    verdict.star_size = g.k == 2 ? stars[static_cast<std::size_t>(g.x(1))] : best_leaf_star;

    MaxFamilyResult full = max_intersecting_family(g, r, SearchMode::Full, budget);
    verdict.max_intersecting = full.size;
    verdict.witness = std::move(full.witness);
    verdict.nodes = full.nodes;
    if (verdict.reduced) {
        const MaxFamilyResult reduced =
            max_intersecting_family(g, r, SearchMode::ShiftedReduced, budget);
        verdict.reduced_size = reduced.size;
        verdict.nodes += reduced.nodes;
        if (reduced.size != full.size)
            throw std::logic_error("reduced search disagrees with the full maximum");
    } else {
        verdict.reduced_size = full.size;
    }

    if (verdict.max_intersecting < verdict.best_star_all)
        throw std::logic_error("maximum smaller than a star, which is impossible");
    verdict.is_ekr = verdict.max_intersecting == verdict.best_star_all;
    verdict.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                         .count();
    return verdict;
}

std::vector<ScanRow> scan_conjectures(int max_n, int max_r, const std::vector<ScanKind>& kinds,
                                      const SearchBudget& budget) {
    std::vector<ScanRow> rows;
    for (const auto& kind : kinds) {
        for (int n = 1; n <= max_n; ++n) {
            const Graph g = kind.kind == GraphKind::P3Union ? build_p3_union(n)
                                                            : build_kclaw_union(n, kind.k);
            for (int r = 1; r <= std::min(max_r, g.alpha()); ++r) {
                ScanRow row;
                row.kind = g.kind;
                row.n = n;
                row.k = g.k;
                row.r = r;
                try {
                    const EkrVerdict v = verify_ekr(g, r, SearchMode::Full, budget);
                    row.status = "ok";
                    row.max_intersecting = v.max_intersecting;
                    row.star_size = v.best_star_all;
                    row.is_ekr = v.is_ekr;
                    row.nodes = v.nodes;
                    row.millis = v.millis;
                    if (!v.is_ekr)
                        row.note = r <= n ? "counterexample in conjectured range"
                                          : "outside conjectured range r <= n";
                } catch (const budget_error& e) {
                    row.status = "skipped";
                    row.note = e.what();
                } catch (const std::exception& e) {
                    row.status = "error";
                    row.note = e.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

ChvatalVerdict verify_chvatal_for_bounded_independents(const Graph& g, int r,
                                                       const SearchBudget& budget) {
    if (r < 0) throw std::invalid_argument("size bound must be nonnegative");
    const auto start = std::chrono::steady_clock::now();
    ChvatalVerdict verdict;
    verdict.n = g.n;
    verdict.r = r;

    std::vector<VertexSet> members;
    for (int q = 0; q <= r; ++q) {
        const Family level = enumerate_independent(g, q);
        members.insert(members.end(), level.members().begin(), level.members().end());
    }
    verdict.family_size = static_cast<int>(members.size());
    if (verdict.family_size > budget.max_members)
        throw budget_error("hereditary family exceeds the member budget");

    std::vector<long long> stars(static_cast<std::size_t>(g.vertex_count), 0);
    for (const auto& m : members)
        m.for_each([&](int v) { ++stars[static_cast<std::size_t>(v)]; });
    verdict.largest_star = 0;
    verdict.star_vertex = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (stars[static_cast<std::size_t>(v)] > verdict.largest_star) {
            verdict.largest_star = stars[static_cast<std::size_t>(v)];
            verdict.star_vertex = v;
        }

    const CompatibilityGraph compat(members);
    const CliqueResult clique = compat.max_clique(budget);
    verdict.max_intersecting = clique.size;
    verdict.nodes = clique.nodes;
    for (int idx : clique.members) verdict.witness.push_back(members[static_cast<std::size_t>(idx)]);
    verdict.star_maximal = verdict.max_intersecting == verdict.largest_star;
    verdict.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                         .count();
    return verdict;
}

}  // namespace ekr
