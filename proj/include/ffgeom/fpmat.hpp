#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffgeom/fp.hpp"
#include "ffgeom/tail.hpp"

namespace ffgeom {

/// Dense matrix over F_p, row-major.
class FpMatrix {
public:
    FpMatrix() : p_(0), rows_(0), cols_(0) {}
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

std::size_t fp_rank(FpMatrix m);

/// One solution of M v = rhs if consistent, otherwise nothing. Elimination
/// runs with left-to-right pivots and free variables pinned to zero, so the
/// output is reproducible.
std::optional<std::vector<std::uint32_t>> solve_fp(const FpMatrix& m,
                                                   const std::vector<std::uint32_t>& rhs);

/// Basis of the right kernel, ordered by ascending free-column index.
std::vector<std::vector<std::uint32_t>> nullspace_fp(const FpMatrix& m);

/// Basis of the left kernel (rows y with y M = 0).
std::vector<std::vector<std::uint32_t>> left_nullspace_fp(const FpMatrix& m);

/// Matrix with entry (r, c) = tail coefficient at index start + r + c; tail
/// coefficients past the stored length read as zero.
FpMatrix hankel_block(std::uint32_t p, const LaurentTail& tail, int start, int num_rows,
                      int num_cols);

}  // namespace ffgeom
