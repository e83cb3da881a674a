#include "tolc/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace tolc {

void BettiVector::set(int dim, std::int64_t value) {
    if (dim < -1) throw std::invalid_argument("BettiVector: dimension below -1");
    const std::size_t idx = static_cast<std::size_t>(dim + 1);
    if (idx >= counts_.size()) {
        if (value == 0) return;
        counts_.resize(idx + 1, 0);
    }
    counts_[idx] = value;
}

int BettiVector::max_nonzero_dim() const {
    for (int i = static_cast<int>(counts_.size()) - 1; i >= 0; --i)
        if (counts_[static_cast<std::size_t>(i)] != 0) return i - 1;
    return -2;
}

std::string BettiVector::to_string() const {
    std::string s = "[";
    const int top = std::max(max_nonzero_dim(), -1);
    for (int k = -1; k <= top; ++k) {
        if (k > -1) s += ", ";
        s += std::to_string(get(k));
    }
    return s + "]";
}

bool operator==(const BettiVector& a, const BettiVector& b) {
    const int top = std::max(a.max_nonzero_dim(), b.max_nonzero_dim());
    for (int k = -1; k <= top; ++k)
        if (a.get(k) != b.get(k)) return false;
    return true;
}

namespace {

long index_of(std::span<const VertexSet> sorted, VertexSet f) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
    return static_cast<long>(it - sorted.begin());
}

}  // namespace

IntMatrix boundary_matrix(const FaceTable& faces, int k) {
    const auto rows = faces.level(k - 1);
    const auto cols = faces.level(k);
    IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (long j = 0; j < m.cols; ++j) {
        const VertexSet sigma = cols[static_cast<std::size_t>(j)];
        int i = 0;
        for (int v : sigma.ids()) {
            const VertexSet facet = sigma - VertexSet{v};
            m.at(index_of(rows, facet), j) = (i % 2 == 0) ? 1 : -1;
            ++i;
        }
    }
    return m;
}

BettiVector betti_numbers(const SimplicialComplex& k) { return betti_numbers_from(k, -1); }

BettiVector betti_numbers_from(const SimplicialComplex& k, int lo) {
    if (k.is_void()) throw std::invalid_argument("betti_numbers: void complex");
    const FaceTable faces(k);
    const int top = faces.dimension();
    BettiVector out;
    if (lo > top) return out;
    lo = std::max(lo, -1);
    // rank of ∂_j for j in [lo, top+1]; ∂ above top is zero
    std::vector<long> rank(static_cast<std::size_t>(top + 2 - lo), 0);
    for (int j = lo; j <= top; ++j) {
        if (j == -1) continue;  // ∂_{-1} is the zero map out of C_{-1}
        rank[static_cast<std::size_t>(j - lo)] = exact_rank(boundary_matrix(faces, j));
    }
    for (int d = lo; d <= top; ++d) {
        const long rk_d = (d == -1) ? 0 : rank[static_cast<std::size_t>(d - lo)];
        const long rk_up = (d + 1 > top) ? 0 : rank[static_cast<std::size_t>(d + 1 - lo)];
        out.set(d, faces.count(d) - rk_d - rk_up);
    }
    return out;
}

bool is_acyclic(const SimplicialComplex& k) {
    if (k.is_void()) return false;
    return betti_numbers(k).all_zero();
}

RelativePair::RelativePair(SimplicialComplex x_, SimplicialComplex y_)
    : x(std::move(x_)), y(std::move(y_)) {
    for (VertexSet f : y.maximal_faces())
        if (!x.contains(f))
            throw std::invalid_argument("RelativePair: " + f.to_string() +
                                        " is in Y but not in X");
}

std::vector<std::vector<VertexSet>> relative_cells(const RelativePair& pair) {
    std::vector<std::vector<VertexSet>> cells(
        static_cast<std::size_t>(std::max(0, pair.x.dimension() + 2)));
    for (VertexSet f : enumerate_faces(pair.x))
        if (!pair.y.contains(f)) cells[static_cast<std::size_t>(f.dim() + 1)].push_back(f);
    return cells;  // enumerate_faces is ascending, so each level stays sorted
}

IntMatrix relative_boundary_matrix(const RelativePair& pair,
                                   const std::vector<std::vector<VertexSet>>& cells, int k) {
    const auto level = [&](int d) -> std::span<const VertexSet> {
        const int idx = d + 1;
        if (idx < 0 || idx >= static_cast<int>(cells.size())) return {};
        return cells[static_cast<std::size_t>(idx)];
    };
    const auto rows = level(k - 1);
    const auto colsp = level(k);
    IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(colsp.size()));
    for (long j = 0; j < m.cols; ++j) {
        const VertexSet sigma = colsp[static_cast<std::size_t>(j)];
        int i = 0;
        for (int v : sigma.ids()) {
            const VertexSet facet = sigma - VertexSet{v};
            if (!pair.y.contains(facet)) m.at(index_of(rows, facet), j) = (i % 2 == 0) ? 1 : -1;
            ++i;
        }
    }
    return m;
}

BettiVector relative_betti(const RelativePair& pair) {
    const auto cells = relative_cells(pair);
    const int top = static_cast<int>(cells.size()) - 2;
    BettiVector out;
    std::vector<long> rank(static_cast<std::size_t>(std::max(0, top + 2)), 0);
    for (int j = 0; j <= top; ++j)
        rank[static_cast<std::size_t>(j + 1)] = exact_rank(relative_boundary_matrix(pair, cells, j));
    for (int d = -1; d <= top; ++d) {
        const long n_cells = (d + 1 < static_cast<int>(cells.size()))
                                 ? static_cast<long>(cells[static_cast<std::size_t>(d + 1)].size())
                                 : 0;
        const long rk_d = (d >= 0) ? rank[static_cast<std::size_t>(d + 1)] : 0;
        const long rk_up = (d + 1 <= top) ? rank[static_cast<std::size_t>(d + 2)] : 0;
        out.set(d, n_cells - rk_d - rk_up);
    }
    return out;
}

SimplicialComplex nerve(std::span<const SimplicialComplex> family) {
    if (family.empty()) throw std::invalid_argument("nerve: empty family");
    const VertexSet ambient = family[0].ambient();
    const int m = static_cast<int>(family.size());
    if (m > VertexSet::max_vertices) throw std::invalid_argument("nerve: family too large");
    for (const auto& x : family)
        if (x.ambient() != ambient) throw std::invalid_argument("nerve: mismatched ambient sets");
    // I is a face iff some vertex v lies in every member over I, so the nerve
    // is generated by the per-vertex membership sets.
    std::vector<VertexSet> gens;
    for (int v = 0; v < VertexSet::max_vertices; ++v) {
        if (!ambient.contains(v)) continue;
        VertexSet s;
        for (int i = 0; i < m; ++i)
            if (family[static_cast<std::size_t>(i)].contains(VertexSet{v})) s.insert(i);
        if (!s.empty()) gens.push_back(s);
    }
    const VertexSet nerve_ambient = VertexSet::first_n(m);
    if (gens.empty()) return SimplicialComplex::empty_complex(nerve_ambient);
    return SimplicialComplex::from_maximal_faces(gens, nerve_ambient);
}

}  // namespace tolc
