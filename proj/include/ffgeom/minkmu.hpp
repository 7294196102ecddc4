#pragma once

#include <optional>

#include "ffgeom/lattice.hpp"

namespace ffgeom {

/// Unipotent lattice data for the Minkowski function: dimension 2 or 3 with
/// finite Laurent tails theta (and phi when d = 3) of denominator length at
/// most h.
struct MuInstance {
    FieldSpec field;
    int dim;
    LaurentTail theta;
    LaurentTail phi;  // unused when dim = 2
    int h;

    static MuInstance make(const FieldSpec& field, int dim, const LaurentTail& theta,
                           const LaurentTail& phi = LaurentTail());
};

/// Upper-triangular basis with last column (theta, [phi,] 1).
LatticeBasis make_unipotent_lattice(const MuInstance& inst);

/// Grid remainder prefixes that no nonzero N covers at the failing
/// threshold (beta empty when dim = 2).
struct MuWitness {
    LaurentTail alpha;
    LaurentTail beta;
    int threshold;
};

struct MuDecision {
    bool holds;  // mu <= q^{-T}
    std::optional<MuWitness> witness;
};

/// Exact decision mu(Lambda) <= q^{-T} by the finite F_q linear-system
/// procedure: grid remainder prefixes of length <= h are enumerated by
/// first-nonzero-index class, effective vanishing exponents clamp at h + 1,
/// and a prefix pair is covered iff it lies in the column space of a
/// stacked Hankel system for some (deg N, e_theta, e_phi) with
/// e_theta + e_phi >= deg N + T. Thresholds T <= d hold trivially.
/// The result does not depend on the worker count.
MuDecision mu_decision(const MuInstance& inst, int T, int workers = 1);

struct MuResult {
    AbsValue value;  // q^{-T*}
    std::optional<MuWitness> witness;
};

/// Ascending scan of mu_decision starting at T = d; the scan is guaranteed
/// to stop by T = 2h + 2.
MuResult mu_exact(const MuInstance& inst, int workers = 1);

/// Independent brute-force evaluation over all grid remainder tails of
/// length tail_precision (exact for tail_precision >= h + 1) and all
/// nonzero N with deg N <= h - 1, including the N = 0 branch at
/// |gamma| = q^{-1}.
MuResult mu_brute_oracle(const MuInstance& inst, int tail_precision);

}  // namespace ffgeom
