#include "tolc/collapse.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tolc {

namespace {

// Unique maximal face containing sigma, if exactly one exists.
std::optional<Face> unique_container(const SimplicialComplex& k, Face sigma) {
    std::optional<Face> found;
    for (VertexSet f : k.maximal_faces()) {
        if (!sigma.subset_of(f)) continue;
        if (found) return std::nullopt;
        found = f;
    }
    return found;
}

struct MaxFaceSetHash {
    std::size_t operator()(const std::vector<VertexSet>& fs) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (VertexSet f : fs) {
            h ^= static_cast<std::size_t>(f.bits());
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

struct Searcher {
    int d;
    // memo on the (sorted, antichain) maximal-face list; collisions are
    // resolved by full key comparison via unordered_map semantics
    std::unordered_map<std::vector<VertexSet>, bool, MaxFaceSetHash> memo;

    // Appends the removal steps for a complex of dimension < d: repeatedly
    // delete the largest maximal face as its own free face.
    void sweep_small(SimplicialComplex k, std::vector<CollapseStep>& steps) const {
        while (!k.is_void()) {
            Face best;
            bool first = true;
            for (VertexSet f : k.maximal_faces()) {
                if (first || f.size() > best.size() || (f.size() == best.size() && f < best)) {
                    best = f;
                    first = false;
                }
            }
            steps.push_back({best, best});
            k = costar(k, best);
        }
    }

    bool search(const SimplicialComplex& k, std::vector<CollapseStep>* steps) {
        if (k.is_void()) return true;
        if (k.dimension() < d) {
            if (steps) sweep_small(k, *steps);
            return true;
        }
        if (d == 0) return false;
        const auto it = memo.find(k.maximal_faces());
        if (it != memo.end() && !(steps && it->second)) return it->second;
        bool ok = false;
        for (const auto& [sigma, tau] : free_faces(k, d)) {
            if (sigma.size() != d || tau == sigma) continue;
            if (search(costar(k, sigma), nullptr)) {
                ok = true;
                if (steps) {
                    steps->push_back({sigma, tau});
                    search(costar(k, sigma), steps);
                }
                break;
            }
        }
        memo.try_emplace(k.maximal_faces(), ok);
        return ok;
    }
};

}  // namespace

std::vector<std::pair<Face, Face>> free_faces(const SimplicialComplex& k, int d) {
    if (k.is_void()) throw std::invalid_argument("free_faces: void complex");
    std::vector<std::pair<Face, Face>> out;
    for (VertexSet sigma : enumerate_faces(k)) {
        if (sigma.size() > d) continue;
        if (auto tau = unique_container(k, sigma)) out.emplace_back(sigma, *tau);
    }
    return out;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& k, Face sigma) {
    if (!k.contains(sigma) || !unique_container(k, sigma))
        throw std::invalid_argument("elementary_collapse: " + sigma.to_string() + " is not free");
    return costar(k, sigma);
}

CollapseDecision is_d_collapsible(const SimplicialComplex& k, int d) {
    if (d < 0) throw std::invalid_argument("is_d_collapsible: d must be nonnegative");
    Searcher s{d, {}};
    std::vector<CollapseStep> steps;
    CollapseDecision out;
    out.collapsible = s.search(k, &steps);
    if (out.collapsible) out.certificate = CollapseCertificate{std::move(steps)};
    return out;
}

int collapsibility_number(const SimplicialComplex& k) {
    if (k.is_void()) throw std::invalid_argument("collapsibility_number: void complex");
    const int top = k.dimension() + 1;
    for (int d = 0; d <= top; ++d)
        if (is_d_collapsible(k, d).collapsible) return d;
    return top;  // unreachable: deleting maximal faces one by one is a (dim+1)-collapse
}

bool replay_certificate(const SimplicialComplex& start, const CollapseCertificate& cert, int d) {
    SimplicialComplex k = start;
    for (const CollapseStep& step : cert.steps) {
        if (step.sigma.size() > d) return false;
        if (k.is_void() || !k.contains(step.sigma)) return false;
        const auto tau = unique_container(k, step.sigma);
        if (!tau || *tau != step.unique_max) return false;
        k = costar(k, step.sigma);
    }
    return k.is_void();
}

}  // namespace tolc
