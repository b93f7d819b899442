// Independent r-sets of the structured graphs: enumeration, centre-count
// strata, stars, closed-form counts, and the I/II/III sibling classification.
#pragma once

#include "ekr/family.hpp"
#include "ekr/graph.hpp"
#include "ekr/numbers.hpp"
#include "ekr/rng.hpp"

namespace ekr {

// All independent r-subsets in canonical order; empty when r > alpha(g).
Family enumerate_independent(const Graph& g, int r);

// Members of enumerate_independent(g, r) containing exactly s centres.
Family enumerate_stratum(const Graph& g, int r, int s);

// C(n, s) * C(2n - 2s, r - s): the stratum size for a union of n paths.
Int stratum_count(int n, int r, int s);

// Independent r-sets through v.
Family star(const Graph& g, int v, int r);

// Greedy intersecting subfamily of the independent r-sets, built over a
// random candidate order; maximal when target_size <= 0, else stops at
// target_size members.
Family random_intersecting_family(const Graph& g, int r, int target_size, Rng& rng);

// Sum over s < r of C(n-1, s) * C(2n-2s-1, r-s-1): the size of the star of
// x_1 in the r-sets of a union of n paths.
Int star_size_formula(int n, int r);

enum class SetType { TypeI, TypeII, TypeIII };

// TypeI: no sibling pair inside a (a ∩ L = ∅ counts as TypeI).
// TypeII: a ∩ L nonempty and closed under siblings. TypeIII: mixed.
SetType classify_type(const Graph& g, const VertexSet& a);

struct SiblingProfile {
    int k1 = 0;  // |K ∩ L|
    int k2 = 0;  // sibling pairs fully inside K ∩ L

    bool operator==(const SiblingProfile&) const = default;
};

SiblingProfile sibling_profile(const Graph& g, const VertexSet& k);

}  // namespace ekr
