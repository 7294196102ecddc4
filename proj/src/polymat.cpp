#include "ffgeom/polymat.hpp"

#include <algorithm>
#include <numeric>

#include "ffgeom/errors.hpp"

namespace ffgeom {

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch();
    PolyMatrix r(a.p(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

namespace {

Poly det_rec(const PolyMatrix& m, std::size_t row, std::uint32_t colmask,
             std::vector<std::optional<Poly>>& memo) {
    const std::uint32_t p = m.p();
    if (colmask == 0) return Poly::constant(p, 1);
    if (memo[colmask]) return *memo[colmask];
    Poly acc(p);
    bool plus = true;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!(colmask & (1u << j))) continue;
        const Poly& e = m.at(row, j);
        if (!e.is_zero()) {
            Poly sub = det_rec(m, row + 1, colmask & ~(1u << j), memo);
            Poly term = e * sub;
            acc = plus ? acc + term : acc - term;
        }
        plus = !plus;
    }
    memo[colmask] = acc;
    return acc;
}

}  // namespace

Poly poly_mat_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    if (m.rows() == 0) return Poly::constant(m.p(), 1);
    if (m.rows() > 16) throw BadDimensions();
    std::vector<std::optional<Poly>> memo(1u << m.cols());
    return det_rec(m, 0, (1u << m.cols()) - 1, memo);
}

ColumnReducedForm column_reduce(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const std::uint32_t p = m.p();
    const std::size_t d = m.rows();
    PolyMatrix r = m;
    PolyMatrix u = PolyMatrix::identity(p, d);

    auto col_deg = [&](std::size_t j) -> std::optional<int> { return r.column_degree(j); };
    // pivot row: largest row index among the entries attaining the column
    // degree, so everything below a pivot has strictly smaller degree
    auto pivot_row = [&](std::size_t j, int deg) {
        std::size_t piv = 0;
        for (std::size_t i = 0; i < d; ++i) {
            auto di = r.at(i, j).degree();
            if (di && *di == deg) piv = i;
        }
        return piv;
    };

    for (;;) {
        std::vector<int> deg(d);
        std::vector<std::size_t> piv(d);
        for (std::size_t j = 0; j < d; ++j) {
            auto dj = col_deg(j);
            if (!dj) throw SingularMatrix();
            deg[j] = *dj;
            piv[j] = pivot_row(j, deg[j]);
        }
        // smallest pivot row with a collision
        std::size_t target = d;
        for (std::size_t row = 0; row < d && target == d; ++row) {
            std::size_t count = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (piv[j] == row) ++count;
            if (count >= 2) target = row;
        }
        if (target == d) break;  // weak Popov reached

        // reducee: max column degree, ties to the lowest column index;
        // reducer: min column degree among the rest, same tie rule
        std::size_t reducee = d, reducer = d;
        for (std::size_t j = 0; j < d; ++j) {
            if (piv[j] != target) continue;
            if (reducee == d || deg[j] > deg[reducee]) reducee = j;
        }
        for (std::size_t j = 0; j < d; ++j) {
            if (piv[j] != target || j == reducee) continue;
            if (reducer == d || deg[j] < deg[reducer]) reducer = j;
        }

        const int shift = deg[reducee] - deg[reducer];
        const std::uint32_t c =
            fp_mul(p, r.at(target, reducee).coeff(deg[reducee]),
                   fp_inv(p, r.at(target, reducer).coeff(deg[reducer])));
        const Poly factor = Poly::x_power(p, shift, c);
        for (std::size_t i = 0; i < d; ++i) {
            r.at(i, reducee) = r.at(i, reducee) - factor * r.at(i, reducer);
            u.at(i, reducee) = u.at(i, reducee) - factor * u.at(i, reducer);
        }
    }

    // sort columns by degree, stable so ties keep their reduction order
    std::vector<int> deg(d);
    for (std::size_t j = 0; j < d; ++j) deg[j] = *col_deg(j);
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });

    PolyMatrix rs(p, d, d), us(p, d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            rs.at(i, j) = r.at(i, order[j]);
            us.at(i, j) = u.at(i, order[j]);
        }
    std::vector<int> degs(d);
    for (std::size_t j = 0; j < d; ++j) degs[j] = deg[order[j]];

    // permutation parity is the only contribution to det(transform); scale
    // the last column to land in SL
    bool odd = false;
    {
        std::vector<std::size_t> perm = order;
        std::vector<bool> seen(d, false);
        for (std::size_t s = 0; s < d; ++s) {
            if (seen[s]) continue;
            std::size_t len = 0, t = s;
            while (!seen[t]) {
                seen[t] = true;
                t = perm[t];
                ++len;
            }
            if (len % 2 == 0) odd = !odd;
        }
    }
    if (odd && p != 2) {
        const std::uint32_t s = p - 1;  // inverse of -1
        for (std::size_t i = 0; i < d; ++i) {
            rs.at(i, d - 1) = rs.at(i, d - 1).scaled(s);
            us.at(i, d - 1) = us.at(i, d - 1).scaled(s);
        }
    }

    return ColumnReducedForm{std::move(rs), std::move(us), std::move(degs)};
}

FpMatrix leading_coefficient_matrix(const PolyMatrix& reduced,
                                    const std::vector<int>& col_degrees) {
    if (col_degrees.size() != reduced.cols()) throw DimensionMismatch();
    FpMatrix lc(reduced.p(), reduced.rows(), reduced.cols());
    for (std::size_t i = 0; i < reduced.rows(); ++i)
        for (std::size_t j = 0; j < reduced.cols(); ++j)
            lc.at(i, j) = reduced.at(i, j).coeff(col_degrees[j]);
    return lc;
}

}  // namespace ffgeom
