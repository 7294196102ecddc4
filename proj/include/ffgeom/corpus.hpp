#pragma once

#include <random>

#include "ffgeom/dirichlet.hpp"
#include "ffgeom/lattice.hpp"
#include "ffgeom/minkmu.hpp"

namespace ffgeom {

/// Deterministic corpus generation for the invariant and acceptance suites.
/// Every generator consumes a caller-seeded engine, so runs reproduce.
class Corpus {
public:
    explicit Corpus(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Poly poly(std::uint32_t p, int max_deg, bool allow_zero = true);
    Poly nonzero_poly(std::uint32_t p, int max_deg) { return poly(p, max_deg, false); }

    /// num/x^k with bounded numerator degree and x-power denominator.
    RatFunc ratfunc_xden(std::uint32_t p, int max_num_deg, int max_den_pow);

    LaurentTail tail(std::uint32_t p, int max_len);

    /// Nonsingular basis with entries of bounded degree and x-power
    /// denominators.
    LatticeBasis lattice(const FieldSpec& field, int d, int max_deg, int max_den_pow);

    /// Product of elementary matrices over R, a diagonal x^a with sum a = 0,
    /// and a unit-triangular O-factor: |det| = 1 exactly. `spread` bounds the
    /// diagonal exponents and polynomial degrees.
    LatticeBasis unimodular_lattice(const FieldSpec& field, int d, int spread);

    /// Body hO^d with |det h| = 1.
    ConvexBody volume0_body(const FieldSpec& field, int d);

    /// Body with a chosen volume exponent (diagonal rescale of a volume-0
    /// shape).
    ConvexBody body_with_volume(const FieldSpec& field, int d, int volume_exponent);

    MuInstance mu_instance(const FieldSpec& field, int d, int max_h);

    DirichletInstance dirichlet_instance(const FieldSpec& field, int max_n, int max_t,
                                         int max_tail);

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace ffgeom
