#pragma once

#include <utility>
#include <vector>

#include "ffgeom/kmat.hpp"

namespace ffgeom {

/// Lattice gR^d given by a nonsingular basis matrix over K; columns
/// generate the lattice over R = F_p[x].
class LatticeBasis {
public:
    LatticeBasis(FieldSpec field, KMatrix basis);

    const FieldSpec& field() const { return field_; }
    int dim() const { return static_cast<int>(basis_.rows()); }
    const KMatrix& basis() const { return basis_; }
    /// log_q |det g|.
    int det_exponent() const { return det_exponent_; }
    bool unimodular() const { return det_exponent_ == 0; }

private:
    FieldSpec field_;
    KMatrix basis_;
    int det_exponent_;
};

/// Successive minima data together with the decomposition
/// u * g * h = diag(x^{e_1}, ..., x^{e_d}) (entries of u in O, |det u| = 1,
/// h unimodular over R).
struct MinimaProfile {
    std::vector<int> exponents;  // ascending, sum = det exponent
    KMatrix reduced_basis;       // columns are an orthogonal basis, norms q^{e_j}
    KMatrix transform_u;
    PolyMatrix transform_h;
};

MinimaProfile minima(const LatticeBasis& L);

std::pair<std::vector<RatFunc>, AbsValue> shortest_vector(const LatticeBasis& L);

/// All minima equal to 1; requires a unimodular lattice.
bool is_well_rounded(const LatticeBasis& L);

/// Convex body hO^d; membership of v is |(h^{-1}v)_i| <= 1 for all i.
class ConvexBody {
public:
    ConvexBody(FieldSpec field, KMatrix shape);

    const FieldSpec& field() const { return field_; }
    int dim() const { return static_cast<int>(shape_.rows()); }
    const KMatrix& shape() const { return shape_; }
    int volume_exponent() const { return volume_exponent_; }

    bool contains(const std::vector<RatFunc>& v) const;

private:
    FieldSpec field_;
    KMatrix shape_;
    int volume_exponent_;
};

/// CovRad_{O^d} = q^{e_d - 1}.
AbsValue covrad_cube(const LatticeBasis& L);

/// CovRad_C = q^{-1} lambda_d(h^{-1} Lambda).
AbsValue covrad_body(const LatticeBasis& L, const ConvexBody& C);

/// Minima exponents with respect to the gauge of C; sum equals
/// det_exponent(L) - volume_exponent(C).
std::vector<int> minima_body(const LatticeBasis& L, const ConvexBody& C);

/// All nonzero v in the lattice with |v_i| <= q^{r_i} for every i.
/// Coefficient ranges come from the reduced basis, then candidates are
/// filtered per coordinate. Complete and duplicate-free.
std::vector<std::vector<RatFunc>> enumerate_in_box(const LatticeBasis& L,
                                                   const std::vector<int>& radius_exponents);

/// Brute-force covering check: Lambda + q^r O^d = K^d, decided exactly by
/// an F_q rank computation on one quotient level (every point reduces mod
/// the lattice to norm <= q^{e_d - 1}, and distances are quantized in q^Z).
bool covering_oracle(const LatticeBasis& L, int r_exponent, int precision);

/// Norm of v_1 ^ ... ^ v_m equals the product of the norms.
bool wedge_orthogonality(const std::vector<std::vector<RatFunc>>& vectors);

/// Max over the m x m minors' absolute values (the k-vector norm of the
/// wedge); DependentVectors if every minor vanishes.
AbsValue wedge_norm(const std::vector<std::vector<RatFunc>>& vectors);

}  // namespace ffgeom
