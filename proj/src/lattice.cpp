#include "ffgeom/lattice.hpp"

#include <algorithm>

#include "ffgeom/errors.hpp"

namespace ffgeom {

LatticeBasis::LatticeBasis(FieldSpec field, KMatrix basis)
    : field_(field), basis_(std::move(basis)), det_exponent_(0) {
    if (basis_.rows() != basis_.cols()) throw NotSquare();
    if (basis_.rows() < 1) throw BadDimensions();
    if (basis_.p() != field_.p()) throw FieldMismatch();
    const RatFunc det = k_det(basis_);
    if (det.is_zero()) throw SingularMatrix();
    det_exponent_ = det.abs().exponent();
}

MinimaProfile minima(const LatticeBasis& L) {
    const std::uint32_t p = L.field().p();
    const std::size_t d = static_cast<std::size_t>(L.dim());

    // clear denominators: P = D * g with D the monic lcm of all entry
    // denominators, then column degrees of the reduced P shift back by deg D
    Poly D = Poly::constant(p, 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) D = poly_lcm(D, L.basis().at(i, j).den());
    PolyMatrix P(p, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const RatFunc& e = L.basis().at(i, j);
            P.at(i, j) = e.num() * poly_div_exact(D, e.den());
        }

    ColumnReducedForm crf = column_reduce(P);
    const int dshift = D.degree_nonzero();

    MinimaProfile mp;
    mp.exponents.reserve(d);
    for (int cd : crf.col_degrees) mp.exponents.push_back(cd - dshift);
    const RatFunc dinv = RatFunc(Poly::constant(p, 1), D);
    mp.reduced_basis = KMatrix(p, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            mp.reduced_basis.at(i, j) = RatFunc(crf.reduced.at(i, j)) * dinv;
    mp.transform_h = std::move(crf.transform);
    mp.transform_u = k_mul(KMatrix::diag_x_powers(p, mp.exponents), k_inverse(mp.reduced_basis));
    return mp;
}

std::pair<std::vector<RatFunc>, AbsValue> shortest_vector(const LatticeBasis& L) {
    MinimaProfile mp = minima(L);
    return {mp.reduced_basis.col(0), AbsValue::power(mp.exponents.front())};
}

bool is_well_rounded(const LatticeBasis& L) {
    if (!L.unimodular()) throw NotUnimodular();
    MinimaProfile mp = minima(L);
    return std::all_of(mp.exponents.begin(), mp.exponents.end(), [](int e) { return e == 0; });
}

ConvexBody::ConvexBody(FieldSpec field, KMatrix shape)
    : field_(field), shape_(std::move(shape)), volume_exponent_(0) {
    if (shape_.rows() != shape_.cols()) throw NotSquare();
    if (shape_.p() != field_.p()) throw FieldMismatch();
    const RatFunc det = k_det(shape_);
    if (det.is_zero()) throw SingularMatrix();
    volume_exponent_ = det.abs().exponent();
}

bool ConvexBody::contains(const std::vector<RatFunc>& v) const {
    if (v.size() != shape_.rows()) throw DimensionMismatch();
    const std::vector<RatFunc> w = k_apply(k_inverse(shape_), v);
    for (const auto& c : w)
        if (AbsValue::one() < c.abs()) return false;
    return true;
}

AbsValue covrad_cube(const LatticeBasis& L) {
    MinimaProfile mp = minima(L);
    return AbsValue::power(mp.exponents.back() - 1);
}

static LatticeBasis pull_back(const LatticeBasis& L, const ConvexBody& C) {
    if (C.dim() != L.dim()) throw DimensionMismatch();
    return LatticeBasis(L.field(), k_mul(k_inverse(C.shape()), L.basis()));
}

AbsValue covrad_body(const LatticeBasis& L, const ConvexBody& C) {
    MinimaProfile mp = minima(pull_back(L, C));
    return AbsValue::power(mp.exponents.back() - 1);
}

std::vector<int> minima_body(const LatticeBasis& L, const ConvexBody& C) {
    return minima(pull_back(L, C)).exponents;
}

std::vector<std::vector<RatFunc>> enumerate_in_box(const LatticeBasis& L,
                                                   const std::vector<int>& radius_exponents) {
    if (radius_exponents.size() != static_cast<std::size_t>(L.dim())) throw DimensionMismatch();
    const std::uint32_t p = L.field().p();
    const std::size_t d = static_cast<std::size_t>(L.dim());
    MinimaProfile mp = minima(L);
    const int rmax = *std::max_element(radius_exponents.begin(), radius_exponents.end());

    // orthogonality of the reduced columns bounds the coefficient degrees:
    // |a_j| q^{e_j} <= q^{rmax}
    std::vector<int> digits(d);
    double log_total = 0;
    for (std::size_t j = 0; j < d; ++j) {
        digits[j] = std::max(0, rmax - mp.exponents[j] + 1);
        log_total += digits[j];
    }
    if (log_total * std::log2(static_cast<double>(p)) > 27) throw Error("box enumeration too large");

    std::vector<std::vector<RatFunc>> cols(d);
    for (std::size_t j = 0; j < d; ++j) cols[j] = mp.reduced_basis.col(j);

    std::size_t total_digits = 0;
    for (std::size_t j = 0; j < d; ++j) total_digits += static_cast<std::size_t>(digits[j]);
    std::vector<std::uint32_t> a(total_digits, 0);

    std::vector<std::vector<RatFunc>> out;
    for (;;) {
        // advance the base-p odometer; the all-zero tuple is skipped below
        std::size_t k = 0;
        while (k < total_digits) {
            if (++a[k] < p) break;
            a[k] = 0;
            ++k;
        }
        if (k == total_digits) break;

        std::vector<RatFunc> v(d, RatFunc::zero(p));
        std::size_t off = 0;
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<std::uint32_t> cj(a.begin() + static_cast<std::ptrdiff_t>(off),
                                          a.begin() + static_cast<std::ptrdiff_t>(off) +
                                              digits[j]);
            off += static_cast<std::size_t>(digits[j]);
            Poly aj(p, std::move(cj));
            if (aj.is_zero()) continue;
            const RatFunc f(aj);
            for (std::size_t i = 0; i < d; ++i) v[i] = v[i] + f * cols[j][i];
        }
        bool inside = true;
        for (std::size_t i = 0; i < d && inside; ++i)
            inside = !(AbsValue::power(radius_exponents[i]) < v[i].abs());
        if (inside) out.push_back(std::move(v));
    }
    return out;
}

bool covering_oracle(const LatticeBasis& L, int r_exponent, int precision) {
    const std::uint32_t p = L.field().p();
    const std::size_t d = static_cast<std::size_t>(L.dim());
    MinimaProfile mp = minima(L);
    const int ed = mp.exponents.back();
    if (precision < std::abs(r_exponent) + ed + 2) throw PrecisionTooLow();

    // one quotient level suffices: every point is congruent mod the lattice
    // to a point of norm <= q^{e_d - 1} (ultrametric reduction through the
    // spanning reduced basis), and distances live in q^Z
    const int M = std::max(ed, r_exponent) + 1;

    // lattice points of norm <= q^M as an F_q space in the basis
    // coefficients: Cramer bounds deg a_j through the rows of B^{-1}
    const KMatrix& B = mp.reduced_basis;
    const KMatrix Binv = k_inverse(B);
    std::vector<int> tdeg(d);
    for (std::size_t j = 0; j < d; ++j) {
        AbsValue row = AbsValue::zero();
        for (std::size_t k = 0; k < d; ++k) {
            AbsValue a = Binv.at(j, k).abs();
            if (row < a) row = a;
        }
        tdeg[j] = M + row.exponent();
    }

    std::vector<std::size_t> offset(d + 1, 0);
    for (std::size_t j = 0; j < d; ++j)
        offset[j + 1] = offset[j] + static_cast<std::size_t>(std::max(0, tdeg[j] + 1));
    const std::size_t nvars = offset[d];

    // clear denominators of B so the norm constraints are coefficient rows
    Poly D = Poly::constant(p, 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) D = poly_lcm(D, B.at(i, j).den());
    PolyMatrix P(p, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            P.at(i, j) = B.at(i, j).num() * poly_div_exact(D, B.at(i, j).den());
    const int dd = D.degree_nonzero();

    // rows: coefficients of x^k of sum_j P_ij a_j for k > M + deg D
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < d; ++i) {
        int maxdeg = M + dd;
        for (std::size_t j = 0; j < d; ++j)
            if (!P.at(i, j).is_zero() && tdeg[j] >= 0)
                maxdeg = std::max(maxdeg, P.at(i, j).degree_nonzero() + tdeg[j]);
        for (int k = M + dd + 1; k <= maxdeg; ++k) {
            std::vector<std::uint32_t> row(nvars, 0);
            for (std::size_t j = 0; j < d; ++j)
                for (int t = 0; t <= tdeg[j]; ++t)
                    row[offset[j] + static_cast<std::size_t>(t)] = P.at(i, j).coeff(k - t);
            rows.push_back(std::move(row));
        }
    }
    FpMatrix sys(p, rows.size(), nvars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < nvars; ++j) sys.at(i, j) = rows[i][j];
    const auto kernel = nullspace_fp(sys);

    // image of the ball in the quotient x^M O^d / x^r O^d: coefficients of
    // x^{r+1}..x^M per coordinate, spanned by the kernel basis images
    const std::size_t qdim = d * static_cast<std::size_t>(M - r_exponent);
    FpMatrix img(p, kernel.size(), qdim);
    for (std::size_t b = 0; b < kernel.size(); ++b) {
        std::vector<RatFunc> a(d, RatFunc::zero(p));
        for (std::size_t j = 0; j < d; ++j) {
            if (tdeg[j] < 0) continue;
            std::vector<std::uint32_t> cj(kernel[b].begin() + static_cast<std::ptrdiff_t>(offset[j]),
                                          kernel[b].begin() +
                                              static_cast<std::ptrdiff_t>(offset[j + 1]));
            a[j] = RatFunc(Poly(p, std::move(cj)));
        }
        const std::vector<RatFunc> u = k_apply(B, a);
        for (std::size_t i = 0; i < d; ++i) {
            const auto coeffs = laurent_coeff_range(u[i], r_exponent + 1, M);
            for (std::size_t t = 0; t < coeffs.size(); ++t)
                img.at(b, i * static_cast<std::size_t>(M - r_exponent) + t) = coeffs[t];
        }
    }
    return fp_rank(img) == qdim;
}

AbsValue wedge_norm(const std::vector<std::vector<RatFunc>>& vectors) {
    if (vectors.empty()) throw EmptyVector();
    const std::size_t m = vectors.size();
    const std::size_t d = vectors[0].size();
    if (m > d) throw DependentVectors();
    for (const auto& v : vectors)
        if (v.size() != d) throw DimensionMismatch();
    const std::uint32_t p = vectors[0][0].p();

    AbsValue best = AbsValue::zero();
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    // iterate over all m-subsets of rows
    for (;;) {
        KMatrix minor(p, m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) minor.at(i, j) = vectors[j][idx[i]];
        AbsValue a = k_det(minor).abs();
        if (best < a) best = a;

        std::size_t k = m;
        while (k > 0 && idx[k - 1] == d - m + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t t = k; t < m; ++t) idx[t] = idx[t - 1] + 1;
    }
    if (best.is_zero()) throw DependentVectors();
    return best;
}

bool wedge_orthogonality(const std::vector<std::vector<RatFunc>>& vectors) {
    AbsValue w = wedge_norm(vectors);
    AbsValue prod = AbsValue::one();
    for (const auto& v : vectors) prod = prod * vec_norm(std::span<const RatFunc>(v));
    return w == prod;
}

}  // namespace ffgeom
