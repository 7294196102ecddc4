#pragma once

#include <optional>
#include <utility>

#include "ffgeom/orbit.hpp"

namespace ffgeom {

/// Coordinate box {v : |v_i| <= q^{e_i}}; closed balls with integer
/// exponents lose no generality in the ultrametric.
struct Box {
    std::vector<int> exponents;

    int volume_exponent() const {
        int s = 0;
        for (int e : exponents) s += e;
        return s;
    }
};

/// Box meets the lattice only at 0. Decided through the minima of the
/// rescaled lattice diag(x^{-e}) Lambda (empty iff its first minimum
/// exceeds 1), which agrees with emptiness of enumerate_in_box.
bool is_admissible(const LatticeBasis& L, const Box& box);

struct KappaResult {
    std::optional<Box> best;  // largest admissible volume in the window
    bool exhausted;           // every level above the best was ruled out in-window
};

/// Scan boxes with all exponents in [-window, window] by decreasing volume
/// level; within a level the lexicographically first admissible box wins.
KappaResult kappa_search(const LatticeBasis& L, int window);

/// Shift a from the well-rounded search and the pullback box
/// (-1 - a_1, ..., -1 - a_d), admissible with volume exponent -d. Throws
/// NotFoundAtCap when the shift search exhausts its budget.
std::pair<WeightVector, Box> wr_box_certificate(const LatticeBasis& L, int cap = 10);

}  // namespace ffgeom
