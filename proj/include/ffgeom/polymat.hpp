#pragma once

#include <optional>
#include <vector>

#include "ffgeom/fpmat.hpp"
#include "ffgeom/poly.hpp"

namespace ffgeom {

/// Dense matrix over F_p[x], row-major.
class PolyMatrix {
public:
    PolyMatrix() : p_(0), rows_(0), cols_(0) {}
    PolyMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), e_(rows * cols, Poly(p)) {}

    static PolyMatrix identity(std::uint32_t p, std::size_t n) {
        PolyMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(p, 1);
        return m;
    }

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    /// Max entry degree in column j; empty for a zero column.
    std::optional<int> column_degree(std::size_t j) const {
        std::optional<int> d;
        for (std::size_t i = 0; i < rows_; ++i) {
            auto di = at(i, j).degree();
            if (di && (!d || *di > *d)) d = di;
        }
        return d;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<Poly> e_;
};

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b);

/// Exact determinant by expansion over column subsets.
Poly poly_mat_det(const PolyMatrix& m);

struct ColumnReducedForm {
    PolyMatrix reduced;         // = input * transform
    PolyMatrix transform;       // unimodular, det normalized to 1
    std::vector<int> col_degrees;  // ascending
};

/// Column reduction by iterated leading-coefficient cancellation (weak Popov
/// strategy). The leading-coefficient matrix of `reduced` is nonsingular and
/// its column degrees, sorted ascending, realize the successive minima of
/// the column lattice. Throws SingularMatrix (or NotSquare).
ColumnReducedForm column_reduce(const PolyMatrix& m);

/// Entry (i, j) = coefficient of x^{col_degrees[j]} in reduced(i, j).
FpMatrix leading_coefficient_matrix(const PolyMatrix& reduced,
                                    const std::vector<int>& col_degrees);

}  // namespace ffgeom
