#pragma once

#include <cstdint>

#include "ffgeom/errors.hpp"

namespace ffgeom {

// Arithmetic modulo a prime p < 2^16. Elements are canonical residues in
// [0, p). Products fit in 64 bits with room to spare.

inline std::uint32_t fp_add(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t fp_neg(std::uint32_t p, std::uint32_t a) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t fp_sub(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    return fp_add(p, a, fp_neg(p, b));
}

inline std::uint32_t fp_mul(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t fp_inv(std::uint32_t p, std::uint32_t a) {
    if (a == 0) throw ZeroDivisor();
    // extended Euclid on (p, a)
    std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t0 < 0) t0 += p;
    return static_cast<std::uint32_t>(t0);
}

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Prime field F_p, p < 2^16. This library restricts to prime q = p.
class FieldSpec {
public:
    explicit FieldSpec(std::uint32_t p) : p_(p) {
        if (p >= (1u << 16) || !is_prime_u32(p)) throw NotPrime(p);
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t q() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return fp_add(p_, a, b); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return fp_sub(p_, a, b); }
    std::uint32_t neg(std::uint32_t a) const { return fp_neg(p_, a); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return fp_mul(p_, a, b); }
    std::uint32_t inv(std::uint32_t a) const { return fp_inv(p_, a); }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.p_ != b.p_; }

private:
    std::uint32_t p_;
};

}  // namespace ffgeom
