// Stratum-uniform sampling of independent sets: weighted interval patterns
// on the leaf circle, the composed draw I = (centres at S) ∪ (leaves at C),
// and exhaustive exact-rational verification of uniformity.
#pragma once

#include "ekr/cycle.hpp"
#include "ekr/family.hpp"
#include "ekr/graph.hpp"
#include "ekr/indep.hpp"
#include "ekr/numbers.hpp"
#include "ekr/rng.hpp"

#include <utility>
#include <vector>

namespace ekr {

struct WeightedPattern {
    CyclePattern pattern;
    bool paired = false;  // half of a side-1/side-2 pair (mixed-profile generator)
    Rat f;                // raw weight
    Rat h;                // normalized weight; sums to 1 over the family
};

struct PatternFamily {
    int n = 0;
    int r = 0;
    int s = 0;
    std::vector<WeightedPattern> patterns;
};

// True when 0 <= s < r and every pattern the scheme needs fits both the
// interval layout (s + t + u <= n) and its bound regime. Implied by 2r <= n.
bool patterns_admissible(int n, int r, int s);

// The pattern inventory with exact weights. The raw weight of a pattern with
// leaf count kl = r - s and pair count kp is
//   f = 1 / (kp! (kl-2kp)! (n-kl+kp-s)! 4^kp),
// halved for each member of a side pair: the reciprocal of the number of good
// arrangements mapping the pattern onto one fixed leaf set with the matching
// profile, which makes the composed draw exactly uniform on the stratum.
PatternFamily build_pattern_family(int n, int r, int s);

// One draw: shift i and good arrangement uniform, pattern by weight h;
// centres of the paths under the rotated S positions plus leaves at the
// rotated C positions.
VertexSet sample_independent_set(const Graph& g, int r, int s, Rng& rng);
VertexSet sample_independent_set(const Graph& g, const PatternFamily& pf, Rng& rng);

// The set a sample-space point (sigma, i, pattern) composes to.
VertexSet compose_sample(const Graph& g, const GoodPermutation& sigma, int i,
                         const CyclePattern& pattern);

struct ExactDistribution {
    int n = 0;
    int r = 0;
    int s = 0;
    std::vector<std::pair<VertexSet, Rat>> masses;  // canonical set order
    Int stratum_size;
    Rat expected_mass;  // 1 / (C(n,s) C(2n-2s, r-s))
    bool uniform = false;
    std::vector<VertexSet> offenders;  // wrong-mass, missing, or out-of-stratum sets
};

// Full enumeration of the sample space (all good arrangements x 2n shifts x
// all patterns) with exact rational masses; n <= 3.
ExactDistribution exact_distribution(const Graph& g, int r, int s, int threads = 1);

struct IntermediateProbability {
    int k1 = 0;
    int k2 = 0;
    SetType type = SetType::TypeI;
    Int sigma_count_leaf;    // arrangements hitting K ∩ L, per matching pattern
    Int sigma_count_joint;   // arrangements hitting K ∩ L and K ∩ Y together
    Rat leaf_prob;           // Pr[leaves at C rotate onto K ∩ L], pattern drawn by h
    Rat leaf_prob_closed;    // count/|arrangements| times h (or h + h of the pair)
    Rat centre_prob_cond;    // Pr[centres at S rotate onto K ∩ Y | leaf event]
    Rat centre_prob_closed;  // 1 / C(n - k1 + k2, s)
    Rat point_prob;          // Pr[I = K]
    Rat expected_point_prob; // uniform stratum mass
    bool shift_independent = false;  // all counts identical for every shift i
    bool pass = false;
};

// Conditions on each shift i exhaustively and compares the two stage
// probabilities with their closed forms; n <= 3, K in the (r, s) stratum.
IntermediateProbability intermediate_probability_check(const Graph& g, int r, int s,
                                                       const VertexSet& k);

}  // namespace ekr
