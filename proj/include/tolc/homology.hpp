#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tolc/exact_rank.hpp"
#include "tolc/simplicial_complex.hpp"

namespace tolc {

// Ranks of homology groups indexed from dimension -1 upward, exact integers.
// For reduced homology of a complex, the entry at -1 is 1 exactly when the
// complex is {∅}.
class BettiVector {
public:
    BettiVector() = default;

    std::int64_t get(int dim) const {
        const int idx = dim + 1;
        if (idx < 0 || idx >= static_cast<int>(counts_.size())) return 0;
        return counts_[static_cast<std::size_t>(idx)];
    }

    void set(int dim, std::int64_t value);

    // Largest dim with a nonzero entry, or -2 when all entries vanish.
    int max_nonzero_dim() const;

    bool all_zero() const { return max_nonzero_dim() == -2; }

    // Entries from -1 through max(dim stored), e.g. "[1, 0, 2]" starting at -1.
    std::string to_string() const;

    friend bool operator==(const BettiVector& a, const BettiVector& b);
    friend bool operator!=(const BettiVector& a, const BettiVector& b) { return !(a == b); }

private:
    std::vector<std::int64_t> counts_;  // counts_[i] = rank in dimension i-1
};

// Boundary matrix ∂_k of K: rows are (k-1)-faces, columns are k-faces, both in
// ascending bitmask order; the sign of the i-th facet (ascending vertex order)
// is (-1)^i. Includes the augmentation ∂_0 (row ∅).
IntMatrix boundary_matrix(const FaceTable& faces, int k);

// Reduced Betti numbers over the rationals. Requires K nonvoid.
BettiVector betti_numbers(const SimplicialComplex& k);

// Reduced Betti numbers in dimensions >= lo only (entries below lo are 0).
// Cheaper than the full vector when only the tail matters.
BettiVector betti_numbers_from(const SimplicialComplex& k, int lo);

// True iff all reduced homology vanishes, including dimension -1.
// The void complex is not acyclic by convention.
bool is_acyclic(const SimplicialComplex& k);

// A pair Y ⊆ X. Construction checks the containment.
struct RelativePair {
    SimplicialComplex x;
    SimplicialComplex y;

    RelativePair(SimplicialComplex x_, SimplicialComplex y_);
};

// Faces of X∖Y grouped by dimension (ascending bitmask order per level).
// Dimension -1 is populated exactly when Y is void.
std::vector<std::vector<VertexSet>> relative_cells(const RelativePair& pair);

// Boundary matrix of the quotient chain complex at dimension k: facets lying
// in Y are censored. Rows index the (k-1)-cells, columns the k-cells of X∖Y.
IntMatrix relative_boundary_matrix(const RelativePair& pair,
                                   const std::vector<std::vector<VertexSet>>& cells, int k);

// Ranks of the relative homology groups H_k(X,Y).
BettiVector relative_betti(const RelativePair& pair);

// Nerve of a family of complexes on one common ambient set: I ⊆ [m] is a face
// iff the intersection of the members over I contains a nonempty face. The
// result lives on ambient {0..m-1}.
SimplicialComplex nerve(std::span<const SimplicialComplex> family);

}  // namespace tolc
