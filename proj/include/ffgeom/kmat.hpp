#pragma once

#include <vector>

#include "ffgeom/polymat.hpp"
#include "ffgeom/ratfunc.hpp"

namespace ffgeom {

/// Dense matrix over K = F_p(x), row-major. Everything is exact.
class KMatrix {
public:
    KMatrix() : p_(0), rows_(0), cols_(0) {}
    KMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), e_(rows * cols, RatFunc::zero(p)) {}

    static KMatrix identity(std::uint32_t p, std::size_t n) {
        KMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::one(p);
        return m;
    }

    /// diag(x^{e_1}, ..., x^{e_n}).
    static KMatrix diag_x_powers(std::uint32_t p, const std::vector<int>& exps) {
        KMatrix m(p, exps.size(), exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) m.at(i, i) = RatFunc::x_power(p, exps[i]);
        return m;
    }

    static KMatrix from_poly(const PolyMatrix& pm) {
        KMatrix m(pm.p(), pm.rows(), pm.cols());
        for (std::size_t i = 0; i < pm.rows(); ++i)
            for (std::size_t j = 0; j < pm.cols(); ++j) m.at(i, j) = RatFunc(pm.at(i, j));
        return m;
    }

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RatFunc& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<RatFunc> col(std::size_t j) const {
        std::vector<RatFunc> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
        return v;
    }

    friend bool operator==(const KMatrix& a, const KMatrix& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<RatFunc> e_;
};

KMatrix k_mul(const KMatrix& a, const KMatrix& b);
std::vector<RatFunc> k_apply(const KMatrix& a, const std::vector<RatFunc>& v);
RatFunc k_det(const KMatrix& m);
/// Gauss-Jordan inverse; throws SingularMatrix.
KMatrix k_inverse(const KMatrix& m);

}  // namespace ffgeom
