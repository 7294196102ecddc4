#include "ffgeom/ratfunc.hpp"

namespace ffgeom {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.p() != den_.p()) throw FieldMismatch();
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.p(), 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    if (!den_.is_monic()) {
        const std::uint32_t s = fp_inv(den_.p(), den_.leading());
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

RatFunc RatFunc::x_power(std::uint32_t p, int k, std::uint32_t c) {
    if (k >= 0) return RatFunc(Poly::x_power(p, k, c));
    return RatFunc(Poly::constant(p, c), Poly::x_power(p, -k));
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = Poly(p()) - r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDivisor();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::pair<int, RatFunc> rho_pi(const RatFunc& f) {
    if (f.is_zero()) throw ZeroInput();
    const int rho = f.abs().exponent();
    return {rho, f / RatFunc::x_power(f.p(), rho)};
}

std::pair<Poly, RatFunc> split_integer_fractional(const RatFunc& f) {
    auto [q, r] = poly_divmod(f.num(), f.den());
    return {q, RatFunc(r, f.den())};
}

LaurentTail tail_of(const RatFunc& f) {
    auto [q, frac] = split_integer_fractional(f);
    (void)q;
    if (frac.is_zero()) return LaurentTail(f.p());
    const Poly& den = frac.den();
    const int h = den.degree_nonzero();
    // a power of x is monic with no lower-order terms
    for (int i = 0; i < h; ++i)
        if (den.coeff(i) != 0) throw NotFiniteTail();
    // <f> = r / x^h: coefficient of x^{-j} is r_{h-j}
    std::vector<std::uint32_t> a(static_cast<std::size_t>(h), 0);
    for (int j = 1; j <= h; ++j) a[static_cast<std::size_t>(j) - 1] = frac.num().coeff(h - j);
    return LaurentTail(f.p(), std::move(a));
}

RatFunc tail_to_ratfunc(const LaurentTail& t) {
    const std::uint32_t p = t.p();
    if (t.is_zero()) return RatFunc::zero(p);
    const int h = t.denom();
    std::vector<std::uint32_t> num(static_cast<std::size_t>(h), 0);
    for (int j = 1; j <= h; ++j) num[static_cast<std::size_t>(h - j)] = t.coeff(j);
    return RatFunc(Poly(p, std::move(num)), Poly::x_power(p, h));
}

std::vector<std::uint32_t> laurent_coeff_range(const RatFunc& f, int k_lo, int k_hi) {
    if (k_lo > k_hi) throw BadDimensions();
    std::vector<std::uint32_t> out(static_cast<std::size_t>(k_hi - k_lo) + 1, 0);
    if (f.is_zero()) return out;
    // Shift so every requested index is covered by one polynomial division:
    // x^N f = Q + (rem/den) with |rem/den| < 1, hence c_k = Q_{k+N} for all
    // k >= -N.
    const int N = k_lo < 0 ? -k_lo : 0;
    auto [q, rem] = poly_divmod(f.num() * Poly::x_power(f.p(), N), f.den());
    (void)rem;
    for (int k = k_lo; k <= k_hi; ++k)
        out[static_cast<std::size_t>(k - k_lo)] = q.coeff(k + N);
    return out;
}

AbsValue vec_norm(std::span<const RatFunc> v) {
    if (v.empty()) throw EmptyVector();
    AbsValue m = AbsValue::zero();
    for (const auto& f : v) {
        AbsValue a = f.abs();
        if (m < a) m = a;
    }
    return m;
}

AbsValue product_norm(std::span<const RatFunc> v) {
    if (v.empty()) throw EmptyVector();
    AbsValue m = AbsValue::one();
    for (const auto& f : v) m = m * f.abs();
    return m;
}

}  // namespace ffgeom
