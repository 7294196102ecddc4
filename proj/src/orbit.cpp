#include "ffgeom/orbit.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "ffgeom/errors.hpp"

namespace ffgeom {

WeightVector::WeightVector(std::vector<int> entries) : a(std::move(entries)) {
    if (a.empty()) throw BadWeight();
    long long s = 0;
    for (int v : a) s += v;
    if (s != 0) throw BadWeight();
}

int WeightVector::sup_norm() const {
    int m = 0;
    for (int v : a) m = std::max(m, std::abs(v));
    return m;
}

LatticeBasis apply_weight(const LatticeBasis& L, const WeightVector& a) {
    if (a.dim() != L.dim()) throw BadWeight();
    return LatticeBasis(L.field(),
                        k_mul(KMatrix::diag_x_powers(L.field().p(), a.a), L.basis()));
}

MinimaProfile weighted_minima(const LatticeBasis& L, const WeightVector& a) {
    if (!L.unimodular()) throw NotUnimodular();
    return minima(apply_weight(L, a));
}

AbsValue MinkowskiFlag::flag_norm() const {
    AbsValue m = AbsValue::zero();
    for (int k : break_dims) {
        const AbsValue& w = prefix_wedge[static_cast<std::size_t>(k) - 1];
        if (m < w) m = w;
    }
    return m;
}

MinkowskiFlag minkowski_flag(const LatticeBasis& L, const WeightVector& a) {
    MinimaProfile mp = weighted_minima(L, a);
    const std::size_t d = mp.exponents.size();
    MinkowskiFlag f;
    f.exponents = mp.exponents;
    for (std::size_t k = 1; k < d; ++k)
        if (mp.exponents[k - 1] < mp.exponents[k]) f.break_dims.push_back(static_cast<int>(k));
    std::vector<std::vector<RatFunc>> prefix;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        prefix.push_back(mp.reduced_basis.col(k));
        f.prefix_wedge.push_back(wedge_norm(prefix));
    }
    return f;
}

namespace {

// Coordinates supported by the span of the first k reduced columns: the
// lexicographically first k-subset with a nonvanishing wedge coordinate.
std::vector<int> short_support(const MinimaProfile& mp, int k) {
    std::vector<std::vector<RatFunc>> cols;
    for (int j = 0; j < k; ++j) cols.push_back(mp.reduced_basis.col(static_cast<std::size_t>(j)));
    const std::size_t d = cols[0].size();
    const std::size_t m = cols.size();
    const std::uint32_t p = cols[0][0].p();

    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        KMatrix minor(p, m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) minor.at(i, j) = cols[j][idx[i]];
        if (!k_det(minor).is_zero()) return std::vector<int>(idx.begin(), idx.end());
        std::size_t t = m;
        while (t > 0 && idx[t - 1] == d - m + t - 1) --t;
        if (t == 0) break;
        ++idx[t - 1];
        for (std::size_t s = t; s < m; ++s) idx[s] = idx[s - 1] + 1;
    }
    throw DependentVectors();  // reduced basis columns are independent
}

// Z_0^d vectors with sup norm exactly R, lexicographic.
std::vector<WeightVector> shell(int d, int R) {
    std::vector<WeightVector> out;
    std::vector<int> v(static_cast<std::size_t>(d));
    // enumerate the first d-1 entries, the last balances the sum
    std::vector<int> head(static_cast<std::size_t>(d) - 1, -R);
    for (;;) {
        long long s = 0;
        int m = 0;
        for (int x : head) {
            s += x;
            m = std::max(m, std::abs(x));
        }
        const long long last = -s;
        if (std::llabs(last) <= R) {
            const int norm = std::max(m, static_cast<int>(std::llabs(last)));
            if (norm == R) {
                for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = head[i];
                v.back() = static_cast<int>(last);
                out.emplace_back(v);
            }
        }
        std::size_t k = head.size();
        while (k > 0 && head[k - 1] == R) --k;
        if (k == 0) break;
        ++head[k - 1];
        for (std::size_t t = k; t < head.size(); ++t) head[t] = -R;
    }
    return out;
}

}  // namespace

ShiftSearchResult find_wellrounded_shift(const LatticeBasis& L, int cap) {
    if (!L.unimodular()) throw NotUnimodular();
    if (cap < 0) cap = 0;
    const int d = L.dim();

    ShiftSearchResult res{std::nullopt, WeightVector::zero(d), 0, cap};
    auto probe = [&](const WeightVector& a) {
        MinkowskiFlag f = minkowski_flag(L, a);
        const int distinct = f.distinct_values();
        if (res.best_distinct == 0 || distinct < res.best_distinct) {
            res.best_distinct = distinct;
            res.best_attempt = a;
        }
        return f;
    };

    // greedy phase: stretch the coordinates carrying the short subspace,
    // (d-k) on its support against -k elsewhere keeps the sum at zero
    WeightVector a = WeightVector::zero(d);
    std::set<std::vector<int>> visited;
    int prev_distinct = d + 1;
    const int budget = 4 * d * std::max(1, cap);
    for (int step = 0; step <= budget; ++step) {
        if (a.sup_norm() > cap || !visited.insert(a.a).second) break;
        MinkowskiFlag f = probe(a);
        if (f.trivial()) {
            res.found = a;
            return res;
        }
        if (f.distinct_values() > prev_distinct) break;  // heuristic regressed, give up
        prev_distinct = f.distinct_values();

        const int k = f.break_dims.front();
        MinimaProfile mp = weighted_minima(L, a);
        std::vector<int> support = short_support(mp, k);
        std::vector<int> next = a.a;
        std::vector<bool> in_support(static_cast<std::size_t>(d), false);
        for (int i : support) in_support[static_cast<std::size_t>(i)] = true;
        for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] += in_support[static_cast<std::size_t>(i)] ? (d - k) : -k;
        a = WeightVector(std::move(next));
    }

    // complete fallback: breadth-first over sup-norm shells, lexicographic
    for (int R = 0; R <= cap; ++R) {
        for (const WeightVector& cand : shell(d, R)) {
            MinkowskiFlag f = probe(cand);
            if (f.trivial()) {
                res.found = cand;
                return res;
            }
        }
    }
    return res;
}

}  // namespace ffgeom
