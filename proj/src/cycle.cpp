#include "ekr/cycle.hpp"

#include "ekr/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ekr {

int mod_position(int c, int two_n) {
    if (two_n <= 0) throw std::invalid_argument("circle length must be positive");
    int m = (c - 1) % two_n;
    if (m < 0) m += two_n;
    return m + 1;
}

int sibling_label(int label, int n) {
    if (label < 1 || label > 2 * n) throw std::invalid_argument("leaf label out of range");
    return label <= n ? label + n : label - n;
}

LeafPermutation::LeafPermutation(int n, std::vector<int> order) : n_(n), order_(std::move(order)) {
    if (n_ < 1) throw std::invalid_argument("n must be positive");
    if (order_.size() != static_cast<std::size_t>(2 * n_))
        throw std::invalid_argument("arrangement must list all 2n leaves");
    std::vector<char> seen(static_cast<std::size_t>(2 * n_), 0);
    for (int label : order_) {
        if (label < 1 || label > 2 * n_) throw std::invalid_argument("leaf label out of range");
        if (seen[static_cast<std::size_t>(label - 1)])
            throw std::invalid_argument("leaf label repeated in arrangement");
        seen[static_cast<std::size_t>(label - 1)] = 1;
    }
}

LeafPermutation LeafPermutation::identity(int n) {
    std::vector<int> order(static_cast<std::size_t>(2 * n));
    std::iota(order.begin(), order.end(), 1);
    return LeafPermutation(n, std::move(order));
}

bool LeafPermutation::good() const {
    for (int p = 1; p <= 2 * n_; ++p)
        if (at(p + n_) != sibling_label(at(p), n_)) return false;
    return true;
}

VertexSet LeafPermutation::rotate(const std::vector<int>& positions, int j) const {
    VertexSet image;
    for (int c : positions) {
        if (c < 1 || c > 2 * n_) throw std::invalid_argument("circle position out of range");
        image.set(at(c + j) - 1);
    }
    return image;
}

LeafPermutation LeafPermutation::rotated(int j) const {
    std::vector<int> order(static_cast<std::size_t>(2 * n_));
    for (int p = 1; p <= 2 * n_; ++p) order[static_cast<std::size_t>(p - 1)] = at(p + j);
    return LeafPermutation(n_, std::move(order));
}

GoodPermutation::GoodPermutation(LeafPermutation perm) : perm_(std::move(perm)) {
    if (!perm_.good())
        throw std::invalid_argument("arrangement is not good: a sibling pair is not diametrically opposite");
}

GoodPermutation GoodPermutation::identity(int n) {
    return GoodPermutation(LeafPermutation::identity(n));
}

GoodPermutation GoodPermutation::from_parts(const std::vector<int>& path_order,
                                            const std::vector<bool>& take_z_first) {
    const int n = static_cast<int>(path_order.size());
    if (n < 1) throw std::invalid_argument("path order must be nonempty");
    if (take_z_first.size() != path_order.size())
        throw std::invalid_argument("one orientation bit per path is required");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int path : path_order) {
        if (path < 1 || path > n) throw std::invalid_argument("path index out of range");
        if (seen[static_cast<std::size_t>(path - 1)])
            throw std::invalid_argument("path index repeated");
        seen[static_cast<std::size_t>(path - 1)] = 1;
    }
    std::vector<int> order(static_cast<std::size_t>(2 * n));
    for (int p = 1; p <= n; ++p) {
        const int path = path_order[static_cast<std::size_t>(p - 1)];
        const int label = take_z_first[static_cast<std::size_t>(p - 1)] ? path + n : path;
        order[static_cast<std::size_t>(p - 1)] = label;
        order[static_cast<std::size_t>(p + n - 1)] = sibling_label(label, n);
    }
    return GoodPermutation(LeafPermutation(n, std::move(order)));
}

bool is_good(const Graph& g, const std::vector<int>& order) {
    if (g.k != 2) throw std::invalid_argument("good arrangements require a union of paths");
    return LeafPermutation(g.n, order).good();
}

std::vector<GoodPermutation> enumerate_good(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 6) throw std::invalid_argument("good-arrangement enumeration limited to n <= 6");
    std::vector<GoodPermutation> out;
    std::vector<int> paths(static_cast<std::size_t>(n));
    std::iota(paths.begin(), paths.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<bool> bits(static_cast<std::size_t>(n));
            for (int b = 0; b < n; ++b) bits[static_cast<std::size_t>(b)] = (mask >> b) & 1;
            out.push_back(GoodPermutation::from_parts(paths, bits));
        }
    } while (std::next_permutation(paths.begin(), paths.end()));
    return out;
}

Int count_good(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return pow2(static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(n));
}

GoodPermutation random_good(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> paths(static_cast<std::size_t>(n));
    std::iota(paths.begin(), paths.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        const auto j = uniform_below(rng, static_cast<std::uint64_t>(i) + 1);
        std::swap(paths[static_cast<std::size_t>(i)], paths[static_cast<std::size_t>(j)]);
    }
    std::vector<bool> bits(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) bits[static_cast<std::size_t>(b)] = uniform_below(rng, 2) == 1;
    return GoodPermutation::from_parts(paths, bits);
}

CyclePattern::CyclePattern(int n_, int s_, int t_, int u_, int side_)
    : n(n_), s(s_), t(t_), u(u_), side(side_) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (s < 0 || t < 1 || u < 0 || u > t)
        throw std::invalid_argument("interval lengths must satisfy s >= 0, t >= 1, 0 <= u <= t");
    if (s + t + u > n)
        throw std::invalid_argument("intervals overlap: s + t + u must not exceed n");
    if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
}

std::vector<int> CyclePattern::s_positions() const {
    std::vector<int> out;
    for (int c = 1; c <= s; ++c) out.push_back(c);
    return out;
}

std::vector<int> CyclePattern::c_positions() const {
    std::vector<int> out;
    if (side == 1) {
        for (int c = s + 1; c <= s + t; ++c) out.push_back(c);          // T1
        for (int c = s + n + 1; c <= s + n + u; ++c) out.push_back(c);  // U1
    } else {
        for (int c = s + t + 1; c <= s + t + u; ++c) out.push_back(c);              // U2
        for (int c = s + u + n + 1; c <= s + u + n + t; ++c) out.push_back(c);      // T2
    }
    return out;
}

int CyclePattern::pair_count() const {
    if (u == 0) return 0;
    if (t == u) return t;
    return u;
}

CyclePattern CyclePattern::complement() const { return CyclePattern(n, s, t, u, 3 - side); }

int cycle_regime(int n, int t, int u) {
    if (n < 1 || t < 1 || u < 0 || u > t)
        throw std::invalid_argument("interval lengths must satisfy t >= 1, 0 <= u <= t");
    if (u == 0 && n >= t) return 1;
    if (t == u && n >= 2 * t) return 2;
    if (t > u && u >= 1 && n >= 2 * (t + u)) return 3;
    throw std::invalid_argument("parameters fall outside every bound regime");
}

CycleFamily build_cycle_family(const GoodPermutation& sigma, int t, int u) {
    const int n = sigma.n();
    cycle_regime(n, t, u);  // regime violation rejected
    CycleFamily family;
    family.n = n;
    family.t = t;
    family.u = u;
    std::vector<VertexSet> sets;
    for (int side = 1; side <= 2; ++side) {
        const CyclePattern pattern(n, 0, t, u, side);
        const std::vector<int> positions = pattern.c_positions();
        for (int j = 1; j <= 2 * n; ++j) {
            CycleFamilyMember member;
            member.side = side;
            member.j = j;
            member.set = sigma.perm().rotate(positions, j);
            sets.push_back(member.set);
            family.members.push_back(std::move(member));
        }
    }
    family.distinct = Family(t + u, std::move(sets));
    return family;
}

MaxIntersecting max_intersecting_subfamily_exact(const Family& f) {
    if (f.size() > 64) throw std::invalid_argument("family too large for exact search");
    MaxIntersecting result;
    if (f.empty()) return result;
    const CompatibilityGraph compat(f.members());
    const CliqueResult clique =
        f.size() <= 24 ? compat.max_clique_exhaustive() : compat.max_clique();
    result.size = clique.size;
    result.member_indices = clique.members;
    result.search_nodes = clique.nodes;
    return result;
}

CycleBoundReport verify_cycle_bound(int n, int t, int u, const GoodPermutation& sigma) {
    if (sigma.n() != n) throw std::invalid_argument("arrangement size does not match n");
    CycleBoundReport report;
    report.regime = cycle_regime(n, t, u);
    report.n = n;
    report.t = t;
    report.u = u;

    const CycleFamily family = build_cycle_family(sigma, t, u);
    report.family_size = family.distinct.size();
    report.expected_family_size = report.regime == 1 ? 2 * n : report.regime == 2 ? n : 4 * n;
    report.sizes_ok = report.family_size == report.expected_family_size;

    const MaxIntersecting best = max_intersecting_subfamily_exact(family.distinct);
    report.max_intersecting = best.size;
    report.bound = report.regime == 3 ? 2 * (t + u) : t;
    report.bound_ok = report.max_intersecting <= report.bound;
    report.tight_ok = report.regime != 1 || report.max_intersecting == t;

    report.pairing_ok = true;
    if (report.regime == 3) {
        // D^j = C1^j ∪ C2^j must repeat exactly at the antipode.
        std::vector<VertexSet> d(static_cast<std::size_t>(2 * n));
        for (const auto& member : family.members)
            d[static_cast<std::size_t>(member.j - 1)] |= member.set;
        for (int i = 1; i <= 2 * n && report.pairing_ok; ++i)
            for (int j = i + 1; j <= 2 * n; ++j) {
                const bool equal =
                    d[static_cast<std::size_t>(i - 1)] == d[static_cast<std::size_t>(j - 1)];
                if (equal != (j - i == n)) {
                    report.pairing_ok = false;
                    break;
                }
            }
    }
    report.pass = report.sizes_ok && report.bound_ok && report.tight_ok && report.pairing_ok;
    return report;
}

std::vector<CycleBoundReport> verify_cycle_bound_many(int n, int t, int u,
                                               const std::vector<GoodPermutation>& sigmas,
                                               int threads) {
    std::vector<CycleBoundReport> reports(sigmas.size());
    if (sigmas.empty()) return reports;
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(sigmas.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < sigmas.size(); ++i)
            reports[i] = verify_cycle_bound(n, t, u, sigmas[i]);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr failure;
    std::mutex failure_lock;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= sigmas.size()) return;
                try {
                    reports[i] = verify_cycle_bound(n, t, u, sigmas[i]);
                } catch (...) {
                    const std::lock_guard<std::mutex> hold(failure_lock);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    for (auto& worker : pool) worker.join();
    if (failure) std::rethrow_exception(failure);
    return reports;
}

}  // namespace ekr
