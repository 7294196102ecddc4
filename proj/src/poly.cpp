#include "ffgeom/poly.hpp"

namespace ffgeom {

static void check_field(const Poly& a, const Poly& b) {
    if (a.p() != b.p()) throw FieldMismatch();
}

Poly operator+(const Poly& a, const Poly& b) {
    check_field(a, b);
    Poly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = fp_add(a.p_, a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    check_field(a, b);
    Poly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = fp_sub(a.p_, a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.p_);
    Poly r(a.p_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = fp_add(a.p_, r.c_[i + j], fp_mul(a.p_, a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    check_field(a, b);
    if (b.is_zero()) throw ZeroDivisor();
    const std::uint32_t p = a.p();
    Poly rem = a;
    const int db = b.degree_nonzero();
    const std::uint32_t lc_inv = fp_inv(p, b.leading());
    std::vector<std::uint32_t> q;
    if (!rem.is_zero() && rem.degree_nonzero() >= db)
        q.assign(static_cast<std::size_t>(rem.degree_nonzero() - db) + 1, 0);
    while (!rem.is_zero() && rem.degree_nonzero() >= db) {
        const int k = rem.degree_nonzero() - db;
        const std::uint32_t c = fp_mul(p, rem.leading(), lc_inv);
        q[static_cast<std::size_t>(k)] = c;
        rem = rem - b.times_x_power(k).scaled(c);
    }
    return {Poly(p, std::move(q)), rem};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : make_monic(a);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.p());
    Poly g = poly_gcd(a, b);
    return make_monic(poly_div_exact(a * b, g));
}

Poly make_monic(const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return a.scaled(fp_inv(a.p(), a.leading()));
}

}  // namespace ffgeom
