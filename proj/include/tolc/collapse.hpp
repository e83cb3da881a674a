#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tolc/simplicial_complex.hpp"

namespace tolc {

// One elementary collapse: remove every face containing sigma, where sigma is
// contained in exactly one maximal face at removal time (possibly itself).
struct CollapseStep {
    Face sigma;
    Face unique_max;
};

// Ordered steps taking the starting complex to the void complex.
struct CollapseCertificate {
    std::vector<CollapseStep> steps;
};

// All σ ∈ K with |σ| ≤ d contained in exactly one maximal face, paired with
// that face. Ascending bitmask order. Requires K nonvoid.
std::vector<std::pair<Face, Face>> free_faces(const SimplicialComplex& k, int d);

// Remove all faces containing sigma. Requires sigma free in K; the result
// equals costar(K, sigma).
SimplicialComplex elementary_collapse(const SimplicialComplex& k, Face sigma);

struct CollapseDecision {
    bool collapsible = false;
    std::optional<CollapseCertificate> certificate;  // present on yes
};

// Decides d-collapsibility by the recursive characterization: K is
// d-collapsible iff dim(K) < d, or some free σ with |σ| = d ≥ 1 and unique
// maximal face τ ≠ σ has d-collapsible costar. Full backtracking over σ with
// memoization on the maximal-face set; the void complex is vacuously
// d-collapsible. Throws for d < 0.
CollapseDecision is_d_collapsible(const SimplicialComplex& k, int d);

// Least d with is_d_collapsible; searches d = 0, 1, ..., dim(K)+1.
int collapsibility_number(const SimplicialComplex& k);

// Replays a certificate from K, checking each step is a legal elementary
// d-collapse in turn and that the final complex is void.
bool replay_certificate(const SimplicialComplex& k, const CollapseCertificate& cert, int d);

}  // namespace tolc
