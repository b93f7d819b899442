// Exact maximum intersecting subfamilies via clique search on the
// intersection-compatibility graph, and the verdict/scan machinery built on it.
#pragma once

#include "ekr/family.hpp"
#include "ekr/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ekr {

struct SearchBudget {
    int max_members = 2000;
    long long max_nodes = 100'000'000;
};

// Raised when a budget line is crossed; results are never approximated.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliqueResult {
    int size = 0;
    std::vector<int> members;  // ascending vertex indices
    long long nodes = 0;
};

// Vertices are family members; edges join pairs whose intersection is
// nonempty (within `restrict_to` when given). A member whose
// self-intersection fails — an empty set, or one missing `restrict_to`
// entirely — can never sit in an intersecting family and is excluded from
// cliques altogether.
class CompatibilityGraph {
public:
    explicit CompatibilityGraph(const std::vector<VertexSet>& sets);
    CompatibilityGraph(const std::vector<VertexSet>& sets, const VertexSet& restrict_to);

    int size() const { return m_; }
    bool adjacent(int a, int b) const;
    bool eligible(int v) const { return eligible_[static_cast<std::size_t>(v)]; }

    // Branch-and-bound with greedy-coloring bounds; vertices explored in
    // descending-degree order with index tie-breaks, so the witness is
    // deterministic.
    CliqueResult max_clique(const SearchBudget& budget = {}) const;

    // Independent oracle: subset dynamic program over all 2^m subfamilies.
    // Limited to 24 vertices.
    CliqueResult max_clique_exhaustive() const;

private:
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;  // row-major bit matrix
    std::vector<char> eligible_;

    void build(const std::vector<VertexSet>& sets, const VertexSet& restrict_to);
};

enum class SearchMode { Full, ShiftedReduced };

struct MaxFamilyResult {
    int size = 0;
    Family witness;
    long long nodes = 0;
};

// Exact maximum intersecting subfamily of the independent r-sets. In
// ShiftedReduced mode (paths only) the compatibility relation becomes
// "intersects within L"; compression guarantees some optimum family is
// L-intersecting, so the reduced maximum equals the full one.
MaxFamilyResult max_intersecting_family(const Graph& g, int r, SearchMode mode = SearchMode::Full,
                                        const SearchBudget& budget = {});

struct EkrVerdict {
    GraphKind kind = GraphKind::P3Union;
    int n = 0;
    int k = 2;
    int r = 0;
    int max_intersecting = 0;
    long long star_size = 0;  // |star(x_1)| for paths, best leaf star otherwise
    bool is_ekr = false;
    Family witness;
    bool reduced = false;   // ShiftedReduced search mode was used
    int reduced_size = 0;   // L-restricted maximum; equals max_intersecting
    long long best_star_all = 0;  // max star size over every vertex
    int best_star_vertex = 0;     // smallest vertex id attaining it
    bool leaf_star_maximal = false;
    long long nodes = 0;
    double millis = 0.0;
};

EkrVerdict verify_ekr(const Graph& g, int r, SearchMode mode = SearchMode::Full,
                      const SearchBudget& budget = {});

struct ScanKind {
    GraphKind kind = GraphKind::P3Union;
    int k = 2;
};

struct ScanRow {
    GraphKind kind = GraphKind::P3Union;
    int n = 0;
    int k = 2;
    int r = 0;
    std::string status;  // ok | skipped | error
    int max_intersecting = -1;
    long long star_size = -1;
    bool is_ekr = false;
    long long nodes = 0;
    double millis = 0.0;
    std::string note;
};

// One row per (kind, n <= max_n, r <= min(max_r, alpha)); rows whose search
// exceeds the budget are marked skipped, never guessed.
std::vector<ScanRow> scan_conjectures(int max_n, int max_r, const std::vector<ScanKind>& kinds,
                                      const SearchBudget& budget = {});

struct ChvatalVerdict {
    int n = 0;
    int r = 0;
    int family_size = 0;  // |independent sets of size <= r|, empty set included
    int max_intersecting = 0;
    long long largest_star = 0;
    int star_vertex = 0;
    bool star_maximal = false;
    std::vector<VertexSet> witness;  // mixed cardinalities
    long long nodes = 0;
    double millis = 0.0;
};

// Largest intersecting subfamily of the hereditary family of independent
// sets of size at most r, compared against its largest star.
ChvatalVerdict verify_chvatal_for_bounded_independents(const Graph& g, int r,
                                                       const SearchBudget& budget = {});

}  // namespace ekr
