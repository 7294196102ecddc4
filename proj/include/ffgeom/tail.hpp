#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffgeom/absval.hpp"
#include "ffgeom/fp.hpp"

namespace ffgeom {

/// Finite Laurent tail sum_{j=1..h} a_j x^{-j} over F_p. Canonical form
/// trims trailing zeros, so h = denom exactly when the tail is nonzero.
class LaurentTail {
public:
    LaurentTail() : p_(0) {}
    explicit LaurentTail(std::uint32_t p) : p_(p) {}
    LaurentTail(std::uint32_t p, std::vector<std::uint32_t> coeffs)
        : p_(p), a_(std::move(coeffs)) {
        for (auto& c : a_) c %= p_;
        while (!a_.empty() && a_.back() == 0) a_.pop_back();
    }

    std::uint32_t p() const { return p_; }
    bool is_zero() const { return a_.empty(); }
    int denom() const { return static_cast<int>(a_.size()); }

    /// Coefficient of x^{-j}, j >= 1; zero beyond the stored length.
    std::uint32_t coeff(int j) const {
        if (j < 1 || static_cast<std::size_t>(j) > a_.size()) return 0;
        return a_[static_cast<std::size_t>(j) - 1];
    }

    const std::vector<std::uint32_t>& coeffs() const { return a_; }

    AbsValue abs() const {
        for (std::size_t j = 0; j < a_.size(); ++j)
            if (a_[j] != 0) return AbsValue::power(-static_cast<int>(j) - 1);
        return AbsValue::zero();
    }

    friend bool operator==(const LaurentTail& a, const LaurentTail& b) {
        return a.p_ == b.p_ && a.a_ == b.a_;
    }
    friend bool operator!=(const LaurentTail& a, const LaurentTail& b) { return !(a == b); }

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> a_;
};

}  // namespace ffgeom
