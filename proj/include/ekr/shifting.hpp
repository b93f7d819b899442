// Compression of intersecting families: the point map that slides a centre
// y_i down to its leaf x_i, its family-level lift, and the iterated-to-fixpoint
// shift together with the properties it guarantees.
#pragma once

#include "ekr/family.hpp"
#include "ekr/graph.hpp"

#include <stdexcept>
#include <utility>

namespace ekr {

struct ShiftReport {
    int input_size = 0;
    int output_size = 0;
    bool is_shifted = false;
    bool l_intersecting = false;
    int passes = 0;  // single-component applications performed
};

struct non_intersecting_error : std::invalid_argument {
    non_intersecting_error(VertexSet a_, VertexSet b_)
        : std::invalid_argument("family is not intersecting"), a(a_), b(b_) {}

    VertexSet a, b;  // witness pair with empty intersection
};

// y_i -> x_i inside one independent set; identity when y_i is absent.
VertexSet phi_point(const Graph& g, const VertexSet& a, int i);

// {phi_i(A) : A in f} ∪ {A : A and phi_i(A) both in f}. Size-preserving.
Family shift_once(const Graph& g, const Family& f, int i);

// Passes i = 1..n repeated until a fixpoint. Input must be intersecting.
std::pair<Family, ShiftReport> shift_full(const Graph& g, const Family& f);

// Every member with y_i also has its x_i-replacement in the family.
bool is_shifted(const Graph& g, const Family& f);

// Pairwise nonempty intersections; a family with an empty member is not
// intersecting (its self-intersection is empty).
bool is_intersecting(const Family& f);

// Pairwise intersections meet the leaf set L.
bool is_l_intersecting(const Graph& g, const Family& f);

}  // namespace ekr
