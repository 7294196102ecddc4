#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ffgeom/absval.hpp"
#include "ffgeom/poly.hpp"
#include "ffgeom/tail.hpp"

namespace ffgeom {

/// Element of K = F_p(x) in canonical form: monic denominator, coprime to
/// the numerator, zero represented as 0/1. Equality is structural.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.p(), 1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc zero(std::uint32_t p) { return RatFunc(Poly(p)); }
    static RatFunc one(std::uint32_t p) { return RatFunc(Poly::constant(p, 1)); }
    static RatFunc constant(std::uint32_t p, std::uint32_t c) {
        return RatFunc(Poly::constant(p, c));
    }
    /// x^k for any integer k (negative powers via the denominator).
    static RatFunc x_power(std::uint32_t p, int k, std::uint32_t c = 1);

    std::uint32_t p() const { return num_.p(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    AbsValue abs() const {
        if (num_.is_zero()) return AbsValue::zero();
        return AbsValue::power(num_.degree_nonzero() - den_.degree_nonzero());
    }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    Poly num_, den_;
};

inline AbsValue abs_value(const RatFunc& f) { return f.abs(); }

/// (rho, pi) with f = x^rho * pi and |pi| = 1. Throws ZeroInput on f = 0.
std::pair<int, RatFunc> rho_pi(const RatFunc& f);

/// ([f], <f>) with f = [f] + <f>, [f] polynomial, |<f>| < 1.
std::pair<Poly, RatFunc> split_integer_fractional(const RatFunc& f);

/// Finite coefficient sequence of <f>; requires the reduced denominator of
/// <f> to be a power of x, otherwise throws NotFiniteTail.
LaurentTail tail_of(const RatFunc& f);

RatFunc tail_to_ratfunc(const LaurentTail& t);

/// Coefficients c_k of the Laurent expansion f = sum_{k <= top} c_k x^k,
/// returned for k = k_lo .. k_hi inclusive (index 0 holds c_{k_lo}).
std::vector<std::uint32_t> laurent_coeff_range(const RatFunc& f, int k_lo, int k_hi);

AbsValue vec_norm(std::span<const RatFunc> v);
AbsValue product_norm(std::span<const RatFunc> v);

}  // namespace ffgeom
