#include "ffgeom/kmat.hpp"

#include "ffgeom/errors.hpp"

namespace ffgeom {

KMatrix k_mul(const KMatrix& a, const KMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch();
    KMatrix r(a.p(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

std::vector<RatFunc> k_apply(const KMatrix& a, const std::vector<RatFunc>& v) {
    if (a.cols() != v.size()) throw DimensionMismatch();
    std::vector<RatFunc> r(a.rows(), RatFunc::zero(a.p()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) r[i] = r[i] + a.at(i, j) * v[j];
    return r;
}

RatFunc k_det(const KMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const std::size_t n = m.rows();
    KMatrix a = m;
    RatFunc det = RatFunc::one(m.p());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a.at(sel, col).is_zero()) ++sel;
        if (sel == n) return RatFunc::zero(m.p());
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
            det = -det;
        }
        det = det * a.at(col, col);
        const RatFunc inv = RatFunc::one(m.p()) / a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            const RatFunc f = a.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        }
    }
    return det;
}

KMatrix k_inverse(const KMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const std::size_t n = m.rows();
    KMatrix a = m;
    KMatrix inv = KMatrix::identity(m.p(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a.at(sel, col).is_zero()) ++sel;
        if (sel == n) throw SingularMatrix();
        if (sel != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(sel, j), a.at(col, j));
                std::swap(inv.at(sel, j), inv.at(col, j));
            }
        const RatFunc s = RatFunc::one(m.p()) / a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * s;
            inv.at(col, j) = inv.at(col, j) * s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            const RatFunc f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace ffgeom
