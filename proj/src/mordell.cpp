#include "ffgeom/mordell.hpp"

#include "ffgeom/errors.hpp"

namespace ffgeom {

bool is_admissible(const LatticeBasis& L, const Box& box) {
    if (box.exponents.size() != static_cast<std::size_t>(L.dim())) throw DimensionMismatch();
    std::vector<int> neg(box.exponents.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -box.exponents[i];
    const LatticeBasis scaled(L.field(),
                              k_mul(KMatrix::diag_x_powers(L.field().p(), neg), L.basis()));
    return minima(scaled).exponents.front() >= 1;
}

KappaResult kappa_search(const LatticeBasis& L, int window) {
    if (!L.unimodular()) throw NotUnimodular();
    if (window < L.dim()) throw BadDimensions();
    const int d = L.dim();

    // boxes grouped by volume level, lexicographic within a level
    for (int level = d * window; level >= -d * window; --level) {
        std::vector<int> e(static_cast<std::size_t>(d), -window);
        for (;;) {
            int s = 0;
            for (int v : e) s += v;
            if (s == level) {
                Box box{e};
                if (is_admissible(L, box))
                    return KappaResult{box, true};
            }
            int k = d - 1;
            while (k >= 0 && e[static_cast<std::size_t>(k)] == window) --k;
            if (k < 0) break;
            ++e[static_cast<std::size_t>(k)];
            for (int t = k + 1; t < d; ++t) e[static_cast<std::size_t>(t)] = -window;
        }
    }
    return KappaResult{std::nullopt, false};
}

std::pair<WeightVector, Box> wr_box_certificate(const LatticeBasis& L, int cap) {
    ShiftSearchResult s = find_wellrounded_shift(L, cap);
    if (!s.found) throw NotFoundAtCap(cap);
    const WeightVector& a = *s.found;
    Box box;
    box.exponents.reserve(a.a.size());
    for (int ai : a.a) box.exponents.push_back(-1 - ai);
    return {a, box};
}

}  // namespace ffgeom
