#include "ekr/sampler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace ekr {

namespace {

// A_s ∪ B_s: the arc pattern C1(k1, 0); the balanced pattern C1(k1/2, k1/2)
// when k1 is even; and both sides of C(t, k1 - t) for each split with
// t > k1 - t >= 1. The bool marks members of the paired group.
std::vector<std::pair<CyclePattern, bool>> pattern_inventory(int n, int r, int s) {
    const int k1 = r - s;
    std::vector<std::pair<CyclePattern, bool>> out;
    out.emplace_back(CyclePattern(n, s, k1, 0, 1), false);
    if (k1 % 2 == 0) out.emplace_back(CyclePattern(n, s, k1 / 2, k1 / 2, 1), false);
    for (int t = k1 / 2 + 1; t <= k1 - 1; ++t) {
        out.emplace_back(CyclePattern(n, s, t, k1 - t, 1), true);
        out.emplace_back(CyclePattern(n, s, t, k1 - t, 2), true);
    }
    return out;
}

bool pattern_fits(int n, int s, int t, int u) {
    if (s + t + u > n) return false;
    if (u == 0 && n >= t) return true;
    if (t == u && n >= 2 * t) return true;
    if (t > u && u >= 1 && n >= 2 * (t + u)) return true;
    return false;
}

// Good arrangements sending a fixed pattern with pair count kp onto a fixed
// leaf set of profile (kl, kp): the paired positions take the kp sibling
// pairs in any order and orientation, the unpaired positions take the
// kl - 2 kp unpaired leaves with forced orientation, and the remaining
// position pairs of the circle are free.
Int sigma_count_leaf_closed(int n, int kl, int kp) {
    return factorial(static_cast<unsigned long>(kp)) * pow2(static_cast<unsigned long>(kp)) *
           factorial(static_cast<unsigned long>(kl - 2 * kp)) *
           factorial(static_cast<unsigned long>(n - kl + kp)) *
           pow2(static_cast<unsigned long>(n - kl + kp));
}

// As above with the s S-positions additionally forced onto the paths of the
// s required centres (orientation free).
Int sigma_count_joint_closed(int n, int kl, int kp, int s) {
    return factorial(static_cast<unsigned long>(kp)) * pow2(static_cast<unsigned long>(kp)) *
           factorial(static_cast<unsigned long>(kl - 2 * kp)) *
           factorial(static_cast<unsigned long>(s)) * pow2(static_cast<unsigned long>(s)) *
           factorial(static_cast<unsigned long>(n - kl + kp - s)) *
           pow2(static_cast<unsigned long>(n - kl + kp - s));
}

// Reciprocal of the pattern-dependent part of the joint count, so that
// weight times count is constant across patterns; halved for pair members so
// a pair contributes once.
Rat raw_weight(int n, int s, const CyclePattern& pattern, bool paired) {
    const int kl = pattern.leaf_count();
    const int kp = pattern.pair_count();
    Int denom = factorial(static_cast<unsigned long>(kp)) *
                factorial(static_cast<unsigned long>(kl - 2 * kp)) *
                factorial(static_cast<unsigned long>(n - kl + kp - s));
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), static_cast<unsigned long>(2 * kp));
    if (paired) denom *= 2;
    Rat f(Int(1), denom);
    f.canonicalize();
    return f;
}

// Uniform integer in [0, bound) assembled from 64-bit words, by rejection.
Int draw_below(Rng& rng, const Int& bound) {
    if (bound <= 0) throw std::invalid_argument("draw_below: empty range");
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    for (;;) {
        Int v = 0;
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t word = rng();
            mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 64);
            Int chunk;
            mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
            v += chunk;
        }
        mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);  // keep `bits` bits
        if (v < bound) return v;
    }
}

void require_paths(const Graph& g) {
    if (g.k != 2) throw std::invalid_argument("sampling requires a union of paths");
}

}  // namespace

bool patterns_admissible(int n, int r, int s) {
    if (n < 1 || s < 0 || s >= r) return false;
    const int k1 = r - s;
    if (!pattern_fits(n, s, k1, 0)) return false;
    if (k1 % 2 == 0 && !pattern_fits(n, s, k1 / 2, k1 / 2)) return false;
    for (int t = k1 / 2 + 1; t <= k1 - 1; ++t)
        if (!pattern_fits(n, s, t, k1 - t)) return false;
    return true;
}

PatternFamily build_pattern_family(int n, int r, int s) {
    if (s < 0 || s >= r) throw std::invalid_argument("stratum must satisfy 0 <= s < r");
    if (!patterns_admissible(n, r, s))
        throw std::invalid_argument("pattern family falls outside the bound regimes");
    PatternFamily family;
    family.n = n;
    family.r = r;
    family.s = s;
    Rat total = 0;
    for (const auto& [pattern, paired] : pattern_inventory(n, r, s)) {
        WeightedPattern wp{pattern, paired, raw_weight(n, s, pattern, paired), Rat(0)};
        total += wp.f;
        family.patterns.push_back(std::move(wp));
    }
    for (auto& wp : family.patterns) {
        wp.h = wp.f / total;
        wp.h.canonicalize();
    }
    return family;
}

VertexSet compose_sample(const Graph& g, const GoodPermutation& sigma, int i,
                         const CyclePattern& pattern) {
    require_paths(g);
    if (sigma.n() != g.n || pattern.n != g.n)
        throw std::invalid_argument("arrangement and pattern must match the graph");
    VertexSet out;
    for (int pos : pattern.s_positions()) {
        const int label = sigma.perm().at(pos + i);
        const int path = label <= g.n ? label : label - g.n;
        out.set(g.y(path));
    }
    for (int pos : pattern.c_positions()) out.set(sigma.perm().at(pos + i) - 1);
    return out;
}

VertexSet sample_independent_set(const Graph& g, const PatternFamily& pf, Rng& rng) {
    require_paths(g);
    if (pf.n != g.n) throw std::invalid_argument("pattern family must match the graph");
    const int i = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(2 * g.n)));
    const GoodPermutation sigma = random_good(g.n, rng);

    // Exact inversion draw over the common denominator of the weights.
    Int denominator = 1;
    for (const auto& wp : pf.patterns)
        mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), wp.h.get_den().get_mpz_t());
    const Int pick = draw_below(rng, denominator);
    Int cumulative = 0;
    const CyclePattern* chosen = nullptr;
    for (const auto& wp : pf.patterns) {
        Rat scaled = wp.h * Rat(denominator);
        scaled.canonicalize();
        if (scaled.get_den() != 1) throw std::logic_error("weight scaling is not integral");
        cumulative += scaled.get_num();
        if (pick < cumulative) {
            chosen = &wp.pattern;
            break;
        }
    }
    if (chosen == nullptr) throw std::logic_error("weights do not sum to 1");
    return compose_sample(g, sigma, i, *chosen);
}

VertexSet sample_independent_set(const Graph& g, int r, int s, Rng& rng) {
    return sample_independent_set(g, build_pattern_family(g.n, r, s), rng);
}

ExactDistribution exact_distribution(const Graph& g, int r, int s, int threads) {
    require_paths(g);
    if (g.n > 3) throw std::invalid_argument("exact distribution enumeration limited to n <= 3");
    const PatternFamily pf = build_pattern_family(g.n, r, s);
    const std::vector<GoodPermutation> sigmas = enumerate_good(g.n);

    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(sigmas.size())));
    std::vector<std::map<VertexSet, Rat>> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            auto& local = partial[static_cast<std::size_t>(w)];
            for (std::size_t idx = static_cast<std::size_t>(w); idx < sigmas.size();
                 idx += static_cast<std::size_t>(workers)) {
                for (int i = 1; i <= 2 * g.n; ++i) {
                    for (const auto& wp : pf.patterns) {
                        const VertexSet set = compose_sample(g, sigmas[idx], i, wp.pattern);
                        Rat mass = wp.h / Rat(2L * g.n) / Rat(static_cast<long>(sigmas.size()));
                        mass.canonicalize();
                        local[set] += mass;
                    }
                }
            }
        });
    }
    for (auto& worker : pool) worker.join();

    std::map<VertexSet, Rat> masses;
    for (const auto& local : partial)
        for (const auto& [set, mass] : local) masses[set] += mass;

    ExactDistribution dist;
    dist.n = g.n;
    dist.r = r;
    dist.s = s;
    dist.stratum_size = stratum_count(g.n, r, s);
    dist.expected_mass = Rat(1) / Rat(dist.stratum_size);
    dist.expected_mass.canonicalize();

    const Family stratum = enumerate_stratum(g, r, s);
    dist.uniform = true;
    for (const auto& member : stratum.members()) {
        const auto found = masses.find(member);
        if (found == masses.end() || !(found->second == dist.expected_mass)) {
            dist.uniform = false;
            dist.offenders.push_back(member);
        }
    }
    for (const auto& [set, mass] : masses) {
        if (!stratum.contains(set)) {
            dist.uniform = false;
            dist.offenders.push_back(set);
        }
        dist.masses.emplace_back(set, mass);
    }
    return dist;
}

IntermediateProbability intermediate_probability_check(const Graph& g, int r, int s,
                                                       const VertexSet& k) {
    require_paths(g);
    if (g.n > 3) throw std::invalid_argument("exhaustive conditioning limited to n <= 3");
    if (k.count() != r || !is_independent(g, k) || (k & g.centres).count() != s)
        throw std::invalid_argument("set must lie in the requested stratum");
    const PatternFamily pf = build_pattern_family(g.n, r, s);
    const std::vector<GoodPermutation> sigmas = enumerate_good(g.n);

    IntermediateProbability out;
    const SiblingProfile profile = sibling_profile(g, k);
    out.k1 = profile.k1;
    out.k2 = profile.k2;
    out.type = classify_type(g, k);
    const VertexSet k_leaves = k & g.leaves;

    // Exhaustive conditioning: per shift i and pattern, count arrangements
    // realizing the leaf event and the joint event.
    const std::size_t pat_count = pf.patterns.size();
    std::vector<Int> leaf_counts(pat_count, Int(0)), joint_counts(pat_count, Int(0));
    Rat point_mass_total = 0;  // sum over i and C of h(C) * joint_i[C]
    out.shift_independent = true;
    for (int i = 1; i <= 2 * g.n; ++i) {
        std::vector<Int> leaf_i(pat_count, Int(0)), joint_i(pat_count, Int(0));
        for (const auto& sigma : sigmas)
            for (std::size_t c = 0; c < pat_count; ++c) {
                const VertexSet composed = compose_sample(g, sigma, i, pf.patterns[c].pattern);
                if ((composed & g.leaves) == k_leaves) {
                    ++leaf_i[c];
                    if (composed == k) ++joint_i[c];
                }
            }
        for (std::size_t c = 0; c < pat_count; ++c)
            point_mass_total += pf.patterns[c].h * Rat(joint_i[c]);
        if (i == 1) {
            leaf_counts = leaf_i;
            joint_counts = joint_i;
        } else if (leaf_counts != leaf_i || joint_counts != joint_i) {
            out.shift_independent = false;
        }
    }

    // Matching patterns (same pair count as K) must carry identical counts;
    // all other patterns must never hit K at all.
    out.sigma_count_leaf = 0;
    out.sigma_count_joint = 0;
    Rat leaf_prob = 0, matched_h = 0;
    bool counts_agree = true;
    bool seen_match = false;
    for (std::size_t c = 0; c < pat_count; ++c) {
        const bool matches = pf.patterns[c].pattern.pair_count() == out.k2;
        if (matches) {
            if (!seen_match) {
                out.sigma_count_leaf = leaf_counts[c];
                out.sigma_count_joint = joint_counts[c];
                seen_match = true;
            } else if (leaf_counts[c] != out.sigma_count_leaf ||
                       joint_counts[c] != out.sigma_count_joint) {
                counts_agree = false;
            }
            matched_h += pf.patterns[c].h;
        } else if (leaf_counts[c] != 0 || joint_counts[c] != 0) {
            counts_agree = false;
        }
        leaf_prob += pf.patterns[c].h * Rat(leaf_counts[c]);
    }

    const Rat sigma_total(static_cast<long>(sigmas.size()));
    out.leaf_prob = leaf_prob / sigma_total;
    out.leaf_prob.canonicalize();
    out.leaf_prob_closed =
        Rat(sigma_count_leaf_closed(g.n, out.k1, out.k2)) / sigma_total * matched_h;
    out.leaf_prob_closed.canonicalize();

    out.centre_prob_cond = out.sigma_count_leaf == 0
                               ? Rat(0)
                               : Rat(out.sigma_count_joint) / Rat(out.sigma_count_leaf);
    out.centre_prob_cond.canonicalize();
    out.centre_prob_closed = Rat(1) / Rat(binomial(static_cast<unsigned long>(g.n - out.k1 + out.k2),
                                                   static_cast<unsigned long>(s)));
    out.centre_prob_closed.canonicalize();

    out.point_prob = point_mass_total / sigma_total / Rat(2L * g.n);
    out.point_prob.canonicalize();
    out.expected_point_prob = Rat(1) / Rat(stratum_count(g.n, r, s));
    out.expected_point_prob.canonicalize();

    out.pass = out.shift_independent && counts_agree &&
               out.sigma_count_leaf == sigma_count_leaf_closed(g.n, out.k1, out.k2) &&
               out.sigma_count_joint == sigma_count_joint_closed(g.n, out.k1, out.k2, s) &&
               out.leaf_prob == out.leaf_prob_closed &&
               out.centre_prob_cond == out.centre_prob_closed &&
               out.point_prob == out.expected_point_prob;
    return out;
}

}  // namespace ekr
