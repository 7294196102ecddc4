#include "ffgeom/fpmat.hpp"

#include "ffgeom/errors.hpp"

namespace ffgeom {

namespace {

// Row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> echelon(FpMatrix& m) {
    const std::uint32_t p = m.p();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        const std::uint32_t inv = fp_inv(p, m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = fp_mul(p, m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const std::uint32_t c = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = fp_sub(p, m.at(i, j), fp_mul(p, c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t fp_rank(FpMatrix m) { return echelon(m).size(); }

std::optional<std::vector<std::uint32_t>> solve_fp(const FpMatrix& m,
                                                   const std::vector<std::uint32_t>& rhs) {
    if (rhs.size() != m.rows()) throw DimensionMismatch();
    const std::uint32_t p = m.p();
    FpMatrix aug(p, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i] % p;
    }
    auto pivots = echelon(aug);
    // inconsistent iff a pivot lands in the rhs column
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<std::uint32_t> x(m.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

std::vector<std::vector<std::uint32_t>> nullspace_fp(const FpMatrix& m) {
    const std::uint32_t p = m.p();
    FpMatrix r = m;
    auto pivots = echelon(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t rr = 0; rr < pivots.size(); ++rr)
            v[pivots[rr]] = fp_neg(p, r.at(rr, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<std::uint32_t>> left_nullspace_fp(const FpMatrix& m) {
    FpMatrix t(m.p(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return nullspace_fp(t);
}

FpMatrix hankel_block(std::uint32_t p, const LaurentTail& tail, int start, int num_rows,
                      int num_cols) {
    if (start < 1 || num_rows < 0 || num_cols < 0) throw BadDimensions();
    FpMatrix m(p, static_cast<std::size_t>(num_rows), static_cast<std::size_t>(num_cols));
    for (int r = 0; r < num_rows; ++r)
        for (int c = 0; c < num_cols; ++c)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                tail.coeff(start + r + c);
    return m;
}

}  // namespace ffgeom
