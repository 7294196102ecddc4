#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffgeom/fp.hpp"

namespace ffgeom {

/// Polynomial over F_p in the variable x, coefficient of x^i at index i.
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient vector. deg(0) is represented as an empty optional,
/// never as -1.
class Poly {
public:
    Poly() : p_(0) {}
    explicit Poly(std::uint32_t p) : p_(p) {}
    Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto& c : c_) c %= p_;
        trim();
    }

    static Poly constant(std::uint32_t p, std::uint32_t c) {
        return Poly(p, std::vector<std::uint32_t>{c});
    }
    /// c * x^k, k >= 0.
    static Poly x_power(std::uint32_t p, int k, std::uint32_t c = 1) {
        std::vector<std::uint32_t> v(static_cast<std::size_t>(k) + 1, 0);
        v.back() = c;
        return Poly(p, std::move(v));
    }

    std::uint32_t p() const { return p_; }
    bool is_zero() const { return c_.empty(); }

    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    int degree_nonzero() const {
        if (c_.empty()) throw ZeroInput();
        return static_cast<int>(c_.size()) - 1;
    }

    std::uint32_t coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
        return c_[static_cast<std::size_t>(i)];
    }
    std::uint32_t leading() const {
        if (c_.empty()) throw ZeroInput();
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    Poly times_x_power(int k) const {
        if (is_zero() || k == 0) return k == 0 || is_zero() ? *this : *this;
        std::vector<std::uint32_t> v(c_.size() + static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) v[i + static_cast<std::size_t>(k)] = c_[i];
        Poly r(p_);
        r.c_ = std::move(v);
        return r;
    }

    Poly scaled(std::uint32_t s) const {
        if (s == 0) return Poly(p_);
        Poly r(p_);
        r.c_.reserve(c_.size());
        for (auto c : c_) r.c_.push_back(fp_mul(p_, c, s));
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint32_t p_;
    std::vector<std::uint32_t> c_;

    friend Poly operator+(const Poly&, const Poly&);
    friend Poly operator-(const Poly&, const Poly&);
    friend Poly operator*(const Poly&, const Poly&);
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// Exact division with remainder: a = q*b + r, deg r < deg b. Throws
/// ZeroDivisor when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Quotient of an exact division; throws Error if the remainder is nonzero.
Poly poly_div_exact(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// Monic lcm; lcm with 0 is 0.
Poly poly_lcm(const Poly& a, const Poly& b);

Poly make_monic(const Poly& a);

}  // namespace ffgeom
