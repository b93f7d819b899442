// Circular leaf arrangements and interval families for the cycle method.
//
// Positions on the circle are 1-based and wrap modulo 2n with representatives
// in [1, 2n]. Leaf labels are the integers 1..2n (x_i = i, z_i = n + i), and
// label l names vertex id l - 1. A good arrangement places every sibling pair
// diametrically opposite.
#pragma once

#include "ekr/family.hpp"
#include "ekr/graph.hpp"
#include "ekr/numbers.hpp"
#include "ekr/rng.hpp"
#include "ekr/vertex_set.hpp"

#include <vector>

namespace ekr {

// Canonical representative of position c in [1, 2n].
int mod_position(int c, int two_n);

// z_i for x_i and vice versa, as labels in [1, 2n].
int sibling_label(int label, int n);

// An arbitrary circular arrangement of the 2n leaf labels.
class LeafPermutation {
public:
    LeafPermutation(int n, std::vector<int> order);

    static LeafPermutation identity(int n);

    int n() const { return n_; }
    int size() const { return 2 * n_; }

    // sigma(p); p wraps modulo 2n.
    int at(int p) const {
        return order_[static_cast<std::size_t>(mod_position(p, 2 * n_) - 1)];
    }

    const std::vector<int>& order() const { return order_; }

    bool good() const;

    // Image {sigma(c + j) : c in m} as a set of leaf vertex ids (label - 1).
    VertexSet rotate(const std::vector<int>& positions, int j) const;

    // The arrangement read starting j positions later; preserves goodness.
    LeafPermutation rotated(int j) const;

    bool operator==(const LeafPermutation&) const = default;

private:
    int n_ = 0;
    std::vector<int> order_;  // order_[p-1] = sigma(p), labels in [1, 2n]
};

// A LeafPermutation validated to be good.
class GoodPermutation {
public:
    explicit GoodPermutation(LeafPermutation perm);

    static GoodPermutation identity(int n);

    // Paths listed for positions 1..n plus a z/x orientation bit each;
    // positions n+1..2n hold the forced siblings.
    static GoodPermutation from_parts(const std::vector<int>& path_order,
                                      const std::vector<bool>& take_z_first);

    const LeafPermutation& perm() const { return perm_; }
    int n() const { return perm_.n(); }

    bool operator==(const GoodPermutation&) const = default;

private:
    LeafPermutation perm_;
};

// Diametric-sibling test for an explicit order array over g's leaves.
bool is_good(const Graph& g, const std::vector<int>& order);

// All good arrangements (n <= 6), in a fixed deterministic order.
std::vector<GoodPermutation> enumerate_good(int n);

// 2^n * n!.
Int count_good(int n);

GoodPermutation random_good(int n, Rng& rng);

// Interval scheme on the circle: S = [1..s], T1 = [s+1..s+t],
// U1 = [s+n+1..s+n+u], T2 = [s+u+n+1..s+u+n+t], U2 = [s+t+1..s+t+u];
// side selects C_side = T_side ∪ U_side. Disjointness needs s + t + u <= n.
struct CyclePattern {
    int n = 0;
    int s = 0;
    int t = 0;
    int u = 0;
    int side = 1;

    CyclePattern(int n, int s, int t, int u, int side);

    std::vector<int> s_positions() const;  // S
    std::vector<int> c_positions() const;  // T_side ∪ U_side

    int leaf_count() const { return t + u; }

    // Sibling pairs among the leaves this pattern produces under a good
    // arrangement: 0 when u = 0, t when t = u, u when t > u >= 1.
    int pair_count() const;

    // The pattern on the other side.
    CyclePattern complement() const;

    bool operator==(const CyclePattern&) const = default;
};

// Which of the three bound regimes (n, t, u) falls in: 1 (u = 0, n >= t),
// 2 (t = u, n >= 2t), 3 (t > u >= 1, n >= 2(t+u)). Throws otherwise.
int cycle_regime(int n, int t, int u);

struct CycleFamilyMember {
    int side = 0;
    int j = 0;
    VertexSet set;
};

struct CycleFamily {
    int n = 0;
    int t = 0;
    int u = 0;
    std::vector<CycleFamilyMember> members;  // all 4n (side, j) images
    Family distinct;                         // deduplicated family
};

// All rotations of C_1(t, u) and C_2(t, u) under sigma (s = 0).
CycleFamily build_cycle_family(const GoodPermutation& sigma, int t, int u);

struct MaxIntersecting {
    int size = 0;
    std::vector<int> member_indices;  // into the input family, ascending
    long long search_nodes = 0;
};

// Exact maximum intersecting subfamily; exhaustive subset scan up to 24
// members, branch-and-bound clique search up to 64, larger inputs rejected.
MaxIntersecting max_intersecting_subfamily_exact(const Family& f);

struct CycleBoundReport {
    int regime = 0;
    int n = 0;
    int t = 0;
    int u = 0;
    int family_size = 0;
    int expected_family_size = 0;
    int max_intersecting = 0;
    int bound = 0;
    bool sizes_ok = false;
    bool bound_ok = false;
    bool tight_ok = false;    // regime 1: bound achieved exactly
    bool pairing_ok = false;  // regime 3: D^i = D^j iff j = i + n; true otherwise
    bool pass = false;
};

CycleBoundReport verify_cycle_bound(int n, int t, int u, const GoodPermutation& sigma);

// Per-sigma verification fanned out over worker threads; results in input order.
std::vector<CycleBoundReport> verify_cycle_bound_many(int n, int t, int u,
                                               const std::vector<GoodPermutation>& sigmas,
                                               int threads);

}  // namespace ekr
