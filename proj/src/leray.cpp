#include "tolc/leray.hpp"

#include <stdexcept>

namespace tolc {

LerayDecision is_d_leray(const SimplicialComplex& k, int d) {
    if (k.is_void()) throw std::invalid_argument("is_d_leray: void complex");
    if (d < 0) throw std::invalid_argument("is_d_leray: d must be nonnegative");
    LerayDecision out;
    out.leray = true;
    if (d > k.dimension()) return out;  // no induced subcomplex reaches dimension d
    const VertexSet v = k.ambient();
    const int n = v.size();
    for (int card = n; card > d; --card) {
        for (VertexSet u : subsets_of_size(v, card)) {
            const SimplicialComplex sub = induced(k, u);
            if (sub.dimension() < d) continue;
            const BettiVector b = betti_numbers_from(sub, d);
            const int top = b.max_nonzero_dim();
            if (top >= d) {
                // report the lowest offending dimension for this U
                int i = d;
                while (b.get(i) == 0) ++i;
                out.leray = false;
                out.witness = LerayWitness{u, i};
                return out;
            }
        }
    }
    return out;
}

int leray_number(const SimplicialComplex& k) {
    if (k.is_void()) throw std::invalid_argument("leray_number: void complex");
    const VertexSet v = k.ambient();
    int best = -1;  // largest dimension with nonzero reduced homology over all U
    for (int card = v.size(); card >= 1; --card) {
        if (card - 1 <= best) break;  // dim K[U] <= |U|-1 cannot beat best
        for (VertexSet u : subsets_of_size(v, card)) {
            const SimplicialComplex sub = induced(k, u);
            if (sub.dimension() <= best) continue;
            const int top = betti_numbers_from(sub, best + 1).max_nonzero_dim();
            if (top > best) best = top;
        }
    }
    return best + 1;
}

}  // namespace tolc
