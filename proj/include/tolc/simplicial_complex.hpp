#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tolc/vertex_set.hpp"

namespace tolc {

// A finite simplicial complex on a declared ambient vertex set, stored as the
// antichain of its maximal faces. Faces are implicit: sigma is a face iff it is
// contained in some maximal face.
//
// Two degenerate states are distinct and both representable:
//   - the VOID complex (no faces at all): maximal_faces() is empty;
//   - the EMPTY complex {∅}:              maximal_faces() == { {} }.
// Complexes are immutable after construction; all operations below are pure.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // void complex on an empty ambient set

    // Antichain-reduces the input. Throws if a face is not contained in ambient.
    static SimplicialComplex from_maximal_faces(std::span<const VertexSet> faces,
                                                VertexSet ambient);
    static SimplicialComplex from_maximal_faces(std::initializer_list<VertexSet> faces,
                                                VertexSet ambient);

    static SimplicialComplex void_complex(VertexSet ambient);
    static SimplicialComplex empty_complex(VertexSet ambient);
    // The complete complex 2^U, on ambient ⊇ U.
    static SimplicialComplex complete(VertexSet u, VertexSet ambient);
    // Boundary of the simplex on u: all proper subsets of u. Needs |u| ≥ 1.
    static SimplicialComplex simplex_boundary(VertexSet u, VertexSet ambient);

    VertexSet ambient() const { return ambient_; }
    const std::vector<VertexSet>& maximal_faces() const { return maximal_; }

    bool is_void() const { return maximal_.empty(); }
    bool is_empty_complex() const { return maximal_.size() == 1 && maximal_[0].empty(); }

    // -2 for the void complex, -1 for {∅}, else max |F|-1 over maximal faces.
    int dimension() const;

    bool contains(VertexSet sigma) const;

    // Vertices that occur in some face (a subset of ambient()).
    VertexSet support() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.ambient_ == b.ambient_ && a.maximal_ == b.maximal_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

private:
    VertexSet ambient_;
    std::vector<VertexSet> maximal_;  // sorted ascending by bitmask, antichain
};

// Faces of K grouped by dimension: level(k) lists the k-faces in ascending
// bitmask order, for k = -1 .. dimension().
class FaceTable {
public:
    explicit FaceTable(const SimplicialComplex& k);

    int dimension() const { return static_cast<int>(levels_.size()) - 2; }
    std::span<const VertexSet> level(int k) const;
    // Count of k-faces; 0 outside -1..dimension().
    long count(int k) const;
    long total() const;

private:
    std::vector<std::vector<VertexSet>> levels_;  // levels_[i] = faces of dim i-1
};

// All faces of K (including ∅ when K is nonvoid), ascending bitmask order.
std::vector<VertexSet> enumerate_faces(const SimplicialComplex& k);

// All faces of dimension dim; dim = -1 yields {∅}. Requires K nonvoid.
std::vector<VertexSet> faces_of_dim(const SimplicialComplex& k, int dim);

// K[U] = {σ ∈ K : σ ⊆ U}, on ambient U.
SimplicialComplex induced(const SimplicialComplex& k, VertexSet u);

// lk(K,τ) = {σ : σ∩τ = ∅, σ∪τ ∈ K}, on ambient V∖τ. Requires τ ∈ K.
SimplicialComplex link(const SimplicialComplex& k, VertexSet tau);

// st(K,τ) = {σ : σ∪τ ∈ K}, on ambient V. Requires τ ∈ K.
SimplicialComplex star(const SimplicialComplex& k, VertexSet tau);

// cost(K,τ) = {σ ∈ K : τ ⊄ σ}, on ambient V. cost(K,∅) is the void complex.
SimplicialComplex costar(const SimplicialComplex& k, VertexSet tau);

// X ∗ Y = {σ∪τ : σ∈X, τ∈Y}. Requires disjoint ambient sets.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

// Union / intersection of complexes sharing one ambient set.
SimplicialComplex union_of(std::span<const SimplicialComplex> parts);
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b);

// Some vertex contained in every maximal face (lowest id), if one exists.
// Requires K nonvoid.
std::optional<int> is_cone(const SimplicialComplex& k);

// Minimal non-faces within ambient, ascending bitmask order. Requires K nonvoid.
std::vector<VertexSet> missing_faces(const SimplicialComplex& k);

// Max dimension of a missing face; 0 when there are none. Requires K nonvoid.
int helly_number(const SimplicialComplex& k);

}  // namespace tolc
