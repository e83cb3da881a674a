#include "tolc/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tolc {

std::vector<VertexSet> subsets_of_size(VertexSet s, int k) {
    std::vector<VertexSet> out;
    if (k < 0 || k > s.size()) return out;
    const std::vector<int> ids = s.ids();
    std::vector<int> pick(static_cast<std::size_t>(k));
    // combinations in lexicographic index order == ascending bitmask order
    // (ids are sorted ascending, masks compare by highest differing bit —
    // enumerate via the standard revolving-door-free loop and sort to be safe)
    std::vector<VertexSet> tmp;
    const int n = static_cast<int>(ids.size());
    if (k == 0) {
        out.push_back(VertexSet{});
        return out;
    }
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet f;
        for (int i : pick) f.insert(ids[static_cast<std::size_t>(i)]);
        tmp.push_back(f);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::sort(tmp.begin(), tmp.end());
    return tmp;
}

namespace {

std::vector<VertexSet> antichain_reduce(std::vector<VertexSet> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexSet> keep;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < faces.size() && !dominated; ++j)
            if (j != i && faces[i].subset_of(faces[j]) && faces[i] != faces[j]) dominated = true;
        if (!dominated) keep.push_back(faces[i]);
    }
    return keep;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal_faces(std::span<const VertexSet> faces,
                                                        VertexSet ambient) {
    SimplicialComplex k;
    k.ambient_ = ambient;
    std::vector<VertexSet> fs(faces.begin(), faces.end());
    for (VertexSet f : fs)
        if (!f.subset_of(ambient))
            throw std::invalid_argument("face " + f.to_string() + " not contained in ambient " +
                                        ambient.to_string());
    k.maximal_ = antichain_reduce(std::move(fs));
    return k;
}

SimplicialComplex SimplicialComplex::from_maximal_faces(std::initializer_list<VertexSet> faces,
                                                        VertexSet ambient) {
    return from_maximal_faces(std::span<const VertexSet>(faces.begin(), faces.size()), ambient);
}

SimplicialComplex SimplicialComplex::void_complex(VertexSet ambient) {
    SimplicialComplex k;
    k.ambient_ = ambient;
    return k;
}

SimplicialComplex SimplicialComplex::empty_complex(VertexSet ambient) {
    SimplicialComplex k;
    k.ambient_ = ambient;
    k.maximal_ = {VertexSet{}};
    return k;
}

SimplicialComplex SimplicialComplex::complete(VertexSet u, VertexSet ambient) {
    return from_maximal_faces({u}, ambient);
}

SimplicialComplex SimplicialComplex::simplex_boundary(VertexSet u, VertexSet ambient) {
    if (u.empty()) throw std::invalid_argument("simplex_boundary needs a nonempty vertex set");
    std::vector<VertexSet> facets;
    for (int v : u.ids()) facets.push_back(u - VertexSet{v});
    return from_maximal_faces(facets, ambient);
}

int SimplicialComplex::dimension() const {
    if (maximal_.empty()) return -2;
    int d = -1;
    for (VertexSet f : maximal_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::contains(VertexSet sigma) const {
    for (VertexSet f : maximal_)
        if (sigma.subset_of(f)) return true;
    return false;
}

VertexSet SimplicialComplex::support() const {
    VertexSet s;
    for (VertexSet f : maximal_) s = s | f;
    return s;
}

FaceTable::FaceTable(const SimplicialComplex& k) {
    const int d = k.dimension();
    levels_.resize(static_cast<std::size_t>(std::max(0, d + 2)));
    if (k.is_void()) return;
    std::set<VertexSet> seen;
    for (VertexSet f : k.maximal_faces())
        for_each_subset(f, [&](VertexSet s) { seen.insert(s); });
    for (VertexSet s : seen) levels_[static_cast<std::size_t>(s.dim() + 1)].push_back(s);
    // std::set iterates in ascending bitmask order already; levels inherit it
}

std::span<const VertexSet> FaceTable::level(int k) const {
    const int idx = k + 1;
    if (idx < 0 || idx >= static_cast<int>(levels_.size())) return {};
    return levels_[static_cast<std::size_t>(idx)];
}

long FaceTable::count(int k) const { return static_cast<long>(level(k).size()); }

long FaceTable::total() const {
    long t = 0;
    for (const auto& l : levels_) t += static_cast<long>(l.size());
    return t;
}

std::vector<VertexSet> enumerate_faces(const SimplicialComplex& k) {
    std::set<VertexSet> seen;
    for (VertexSet f : k.maximal_faces())
        for_each_subset(f, [&](VertexSet s) { seen.insert(s); });
    return {seen.begin(), seen.end()};
}

std::vector<VertexSet> faces_of_dim(const SimplicialComplex& k, int dim) {
    if (k.is_void()) throw std::invalid_argument("faces_of_dim: void complex");
    std::set<VertexSet> seen;
    for (VertexSet f : k.maximal_faces())
        for (VertexSet s : subsets_of_size(f, dim + 1)) seen.insert(s);
    return {seen.begin(), seen.end()};
}

SimplicialComplex induced(const SimplicialComplex& k, VertexSet u) {
    u = u & k.ambient();
    if (k.is_void()) return SimplicialComplex::void_complex(u);
    std::vector<VertexSet> faces;
    faces.reserve(k.maximal_faces().size());
    for (VertexSet f : k.maximal_faces()) faces.push_back(f & u);
    return SimplicialComplex::from_maximal_faces(faces, u);
}

SimplicialComplex link(const SimplicialComplex& k, VertexSet tau) {
    if (!k.contains(tau)) throw std::invalid_argument("link: " + tau.to_string() + " is not a face");
    std::vector<VertexSet> faces;
    for (VertexSet f : k.maximal_faces())
        if (tau.subset_of(f)) faces.push_back(f - tau);
    return SimplicialComplex::from_maximal_faces(faces, k.ambient() - tau);
}

SimplicialComplex star(const SimplicialComplex& k, VertexSet tau) {
    if (!k.contains(tau)) throw std::invalid_argument("star: " + tau.to_string() + " is not a face");
    std::vector<VertexSet> faces;
    for (VertexSet f : k.maximal_faces())
        if (tau.subset_of(f)) faces.push_back(f);
    return SimplicialComplex::from_maximal_faces(faces, k.ambient());
}

SimplicialComplex costar(const SimplicialComplex& k, VertexSet tau) {
    if (tau.empty()) return SimplicialComplex::void_complex(k.ambient());
    std::vector<VertexSet> faces;
    for (VertexSet f : k.maximal_faces()) {
        if (!tau.subset_of(f)) {
            faces.push_back(f);
        } else {
            // maximal subsets of f avoiding tau: drop one vertex of tau
            for (int v : tau.ids()) faces.push_back(f - VertexSet{v});
        }
    }
    return SimplicialComplex::from_maximal_faces(faces, k.ambient());
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
    if (!(x.ambient() & y.ambient()).empty())
        throw std::invalid_argument("join: ambient vertex sets overlap");
    std::vector<VertexSet> faces;
    for (VertexSet f : x.maximal_faces())
        for (VertexSet g : y.maximal_faces()) faces.push_back(f | g);
    return SimplicialComplex::from_maximal_faces(faces, x.ambient() | y.ambient());
}

SimplicialComplex union_of(std::span<const SimplicialComplex> parts) {
    if (parts.empty()) throw std::invalid_argument("union_of: empty family");
    std::vector<VertexSet> faces;
    for (const auto& p : parts) {
        if (p.ambient() != parts[0].ambient())
            throw std::invalid_argument("union_of: mismatched ambient sets");
        faces.insert(faces.end(), p.maximal_faces().begin(), p.maximal_faces().end());
    }
    return SimplicialComplex::from_maximal_faces(faces, parts[0].ambient());
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    const SimplicialComplex parts[] = {a, b};
    return union_of(std::span<const SimplicialComplex>(parts, 2));
}

SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("intersection_of: mismatched ambient sets");
    std::vector<VertexSet> faces;
    for (VertexSet f : a.maximal_faces())
        for (VertexSet g : b.maximal_faces()) faces.push_back(f & g);
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(a.ambient());
    return SimplicialComplex::from_maximal_faces(faces, a.ambient());
}

std::optional<int> is_cone(const SimplicialComplex& k) {
    if (k.is_void()) throw std::invalid_argument("is_cone: void complex");
    VertexSet common = k.maximal_faces()[0];
    for (VertexSet f : k.maximal_faces()) common = common & f;
    if (common.empty()) return std::nullopt;
    return common.lowest();
}

std::vector<VertexSet> missing_faces(const SimplicialComplex& k) {
    if (k.is_void()) throw std::invalid_argument("missing_faces: void complex");
    std::vector<VertexSet> out;
    const int max_card = k.dimension() + 2;  // a minimal non-face has all facets in K
    for (int c = 1; c <= std::min(max_card, k.ambient().size()); ++c) {
        for (VertexSet tau : subsets_of_size(k.ambient(), c)) {
            if (k.contains(tau)) continue;
            bool all_facets_in = true;
            for (int v : tau.ids()) {
                if (!k.contains(tau - VertexSet{v})) {
                    all_facets_in = false;
                    break;
                }
            }
            if (all_facets_in) out.push_back(tau);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int helly_number(const SimplicialComplex& k) {
    int h = 0;
    for (VertexSet tau : missing_faces(k)) h = std::max(h, tau.dim());
    return h;
}

}  // namespace tolc
