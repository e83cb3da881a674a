#pragma once

#include <optional>

#include "tolc/homology.hpp"
#include "tolc/simplicial_complex.hpp"

namespace tolc {

// Induced subcomplex and homology dimension witnessing non-d-Lerayness.
struct LerayWitness {
    VertexSet u;
    int dim = 0;
};

struct LerayDecision {
    bool leray = false;
    std::optional<LerayWitness> witness;  // present on no
};

// True iff every induced subcomplex K[U] has vanishing reduced homology in all
// dimensions >= d. Subsets are scanned by descending cardinality (ascending
// bitmask within a cardinality) with an early exit on the first witness.
// Requires K nonvoid and d >= 0.
LerayDecision is_d_leray(const SimplicialComplex& k, int d);

// Least d such that K is d-Leray: 0 when no induced subcomplex carries reduced
// homology in any dimension >= 0, else 1 + the largest witnessed dimension.
// Requires K nonvoid.
int leray_number(const SimplicialComplex& k);

}  // namespace tolc
