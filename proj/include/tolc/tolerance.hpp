#pragma once

#include <vector>

#include "tolc/simplicial_complex.hpp"

namespace tolc {

// T_t(K): faces are unions of a face of K with at most t extra vertices of the
// ambient set. Lives on the same ambient set as K. Requires K nonvoid, t >= 0.
SimplicialComplex tolerance_complex(const SimplicialComplex& k, int t);

struct ToleranceMembership {
    bool member = false;
    Face witness;  // largest face of K inside sigma (lowest bitmask on ties)
};

// Is sigma ∈ T_t(K)? Requires sigma ⊆ ambient and K nonvoid.
ToleranceMembership tolerance_membership(const SimplicialComplex& k, int t, Face sigma);

// The two sides of the costar-difference identity for T_t:
//   left  = faces of T_t(K) not in T_t(cost(K,σ))
//   right = {σ∪η : η ∈ T_t(lk(K,σ)), η outside every T_{t-|σ'|}(lk(K[V∖σ'], σ∖σ'))
//            for nonempty σ' ⊆ σ with |σ'| ≤ t}
// Both are returned as explicit sorted face lists for comparison. Requires
// σ ∈ K and σ nonempty.
struct CostarSplit {
    std::vector<Face> left;
    std::vector<Face> right;
};
CostarSplit costar_split(const SimplicialComplex& k, int t, Face sigma);

// Union over nonempty σ' ⊆ σ with |σ'| ≤ t of T_{t-|σ'|}(lk(K, σ∖σ')[U∪W]),
// on ambient U∪W. Requires σ free in K with unique maximal face σ∪U, U
// nonempty, W ⊆ V∖(σ∪U) with |W| = t.
SimplicialComplex tolerant_link_union(const SimplicialComplex& k, int t, Face sigma, VertexSet u,
                                      VertexSet w);

}  // namespace tolc
