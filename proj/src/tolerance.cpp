#include "tolc/tolerance.hpp"

#include <algorithm>
#include <stdexcept>

namespace tolc {

SimplicialComplex tolerance_complex(const SimplicialComplex& k, int t) {
    if (k.is_void()) throw std::invalid_argument("tolerance_complex: void complex");
    if (t < 0) throw std::invalid_argument("tolerance_complex: t must be nonnegative");
    const VertexSet v = k.ambient();
    // Maximal faces of T_t come from maximal η only: if η ⊆ η' then η∪τ is
    // dominated by η'∪(τ∖η') padded back to t extra vertices.
    std::vector<VertexSet> gens;
    for (VertexSet f : k.maximal_faces()) {
        const VertexSet rest = v - f;
        const int take = std::min(t, rest.size());
        for (VertexSet tau : subsets_of_size(rest, take)) gens.push_back(f | tau);
    }
    return SimplicialComplex::from_maximal_faces(gens, v);
}

ToleranceMembership tolerance_membership(const SimplicialComplex& k, int t, Face sigma) {
    if (k.is_void()) throw std::invalid_argument("tolerance_membership: void complex");
    if (!sigma.subset_of(k.ambient()))
        throw std::invalid_argument("tolerance_membership: face outside ambient");
    // The largest η ⊆ σ with η ∈ K is σ∩F for the best maximal face F.
    ToleranceMembership out;
    bool first = true;
    for (VertexSet f : k.maximal_faces()) {
        const VertexSet cand = f & sigma;
        if (first || cand.size() > out.witness.size() ||
            (cand.size() == out.witness.size() && cand < out.witness)) {
            out.witness = cand;
            first = false;
        }
    }
    out.member = (sigma - out.witness).size() <= t;
    return out;
}

CostarSplit costar_split(const SimplicialComplex& k, int t, Face sigma) {
    if (sigma.empty()) throw std::invalid_argument("costar_split: sigma must be nonempty");
    if (!k.contains(sigma)) throw std::invalid_argument("costar_split: sigma is not a face");
    if (t < 0) throw std::invalid_argument("costar_split: t must be nonnegative");
    const VertexSet v = k.ambient();

    CostarSplit out;

    // left: faces of T_t(K) minus faces of T_t(cost(K,σ))
    const SimplicialComplex tol_k = tolerance_complex(k, t);
    const SimplicialComplex cost_k = costar(k, sigma);
    for (VertexSet f : enumerate_faces(tol_k)) {
        const bool in_cost_side =
            !cost_k.is_void() && tolerance_membership(cost_k, t, f).member;
        if (!in_cost_side) out.left.push_back(f);
    }

    // right: σ∪η over η ∈ T_t(lk(K,σ)) avoiding all shifted-link tolerance complexes
    const SimplicialComplex tol_link = tolerance_complex(link(k, sigma), t);
    std::vector<SimplicialComplex> excluded;  // all on ambient V∖σ
    for_each_subset(sigma, [&](VertexSet sp) {
        if (sp.empty() || sp.size() > t) return;
        const SimplicialComplex restricted = induced(k, v - sp);
        excluded.push_back(tolerance_complex(link(restricted, sigma - sp), t - sp.size()));
    });
    for (VertexSet eta : enumerate_faces(tol_link)) {
        bool hit = false;
        for (const auto& ex : excluded)
            if (ex.contains(eta)) {
                hit = true;
                break;
            }
        if (!hit) out.right.push_back(sigma | eta);
    }

    std::sort(out.left.begin(), out.left.end());
    std::sort(out.right.begin(), out.right.end());
    return out;
}

SimplicialComplex tolerant_link_union(const SimplicialComplex& k, int t, Face sigma, VertexSet u,
                                      VertexSet w) {
    const VertexSet v = k.ambient();
    if (u.empty()) throw std::invalid_argument("tolerant_link_union: U must be nonempty");
    if (!(sigma & u).empty())
        throw std::invalid_argument("tolerant_link_union: sigma and U overlap");
    if (!(w & (sigma | u)).empty() || !w.subset_of(v))
        throw std::invalid_argument("tolerant_link_union: W must lie in V∖(σ∪U)");
    if (w.size() != t) throw std::invalid_argument("tolerant_link_union: |W| must equal t");
    // σ must be free with unique maximal face σ∪U
    int containers = 0;
    bool matches = false;
    for (VertexSet f : k.maximal_faces())
        if (sigma.subset_of(f)) {
            ++containers;
            matches = (f == (sigma | u));
        }
    if (containers != 1 || !matches)
        throw std::invalid_argument(
            "tolerant_link_union: σ∪U is not the unique maximal face over σ");

    std::vector<SimplicialComplex> parts;
    for_each_subset(sigma, [&](VertexSet sp) {
        if (sp.empty() || sp.size() > t) return;
        const SimplicialComplex piece = induced(link(k, sigma - sp), u | w);
        parts.push_back(tolerance_complex(piece, t - sp.size()));
    });
    if (parts.empty())
        return SimplicialComplex::void_complex(u | w);
    return union_of(parts);
}

}  // namespace tolc
