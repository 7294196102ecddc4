#pragma once

#include <optional>
#include <vector>

#include "ffgeom/lattice.hpp"

namespace ffgeom {

/// Integer weight vector a with sum 0; acts by diag(x^{a_1}, ..., x^{a_d}).
struct WeightVector {
    std::vector<int> a;

    explicit WeightVector(std::vector<int> entries);
    static WeightVector zero(int d) { return WeightVector(std::vector<int>(d, 0)); }

    int dim() const { return static_cast<int>(a.size()); }
    int sup_norm() const;

    friend bool operator==(const WeightVector& x, const WeightVector& y) { return x.a == y.a; }
};

/// diag(x^a) L.
LatticeBasis apply_weight(const LatticeBasis& L, const WeightVector& a);

/// Minima of the lattice under the weighted norm ||.||_a, equal to the
/// minima of x^a L. Requires unimodular L.
MinimaProfile weighted_minima(const LatticeBasis& L, const WeightVector& a);

/// Minkowski flag data derived from the weighted minima: the partition of
/// {1..d} by equal minima values plus the prefix wedge norms of the reduced
/// basis.
struct MinkowskiFlag {
    std::vector<int> exponents;          // weighted minima, ascending
    std::vector<int> break_dims;         // proper subspace dimensions of the flag
    std::vector<AbsValue> prefix_wedge;  // norms of c_1 ^ ... ^ c_k, k = 1..d-1

    bool trivial() const { return break_dims.empty(); }
    int distinct_values() const { return static_cast<int>(break_dims.size()) + 1; }
    AbsValue flag_norm() const;  // max prefix wedge norm over the breaks
};

MinkowskiFlag minkowski_flag(const LatticeBasis& L, const WeightVector& a);

struct ShiftSearchResult {
    std::optional<WeightVector> found;  // first hit in the documented search order
    WeightVector best_attempt;          // fewest distinct minima values seen
    int best_distinct;
    int cap;
};

/// Search for a in Z_0^d with x^a L well rounded: a greedy phase stretching
/// the coordinates supporting the short part of the flag, then breadth-first
/// enumeration of Z_0^d by sup norm and lexicographic order up to the cap.
/// Existence is guaranteed without a bound, so an empty `found` is a budget
/// signal, never a disproof.
ShiftSearchResult find_wellrounded_shift(const LatticeBasis& L, int cap);

}  // namespace ffgeom
