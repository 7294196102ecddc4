#include "ffgeom/dirichlet.hpp"

#include "ffgeom/errors.hpp"
#include "ffgeom/fpmat.hpp"
#include "ffgeom/ratfunc.hpp"

namespace ffgeom {

DirichletInstance DirichletInstance::make(const FieldSpec& field,
                                          std::vector<LaurentTail> thetas, std::vector<int> ts) {
    if (thetas.empty() || thetas.size() != ts.size()) throw DimensionMismatch();
    for (const auto& t : thetas)
        if (t.p() != field.p()) throw FieldMismatch();
    for (int t : ts)
        if (t < 0) throw BadDimensions();
    return DirichletInstance{field, std::move(thetas), std::move(ts)};
}

int DirichletInstance::budget_sum() const {
    int s = 0;
    for (int t : ts) s += t;
    return s;
}

DirichletSolution dirichlet_solve(const DirichletInstance& inst) {
    const std::uint32_t p = inst.field.p();
    const int n = inst.n();
    const int cols = inst.budget_sum() + n;
    const int m = cols - 1;

    FpMatrix theta_mat(p, static_cast<std::size_t>(m), static_cast<std::size_t>(cols));
    int off = 0;
    for (int i = 0; i < n; ++i) {
        const FpMatrix block = hankel_block(p, inst.thetas[static_cast<std::size_t>(i)], 1, m,
                                            inst.ts[static_cast<std::size_t>(i)] + 1);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                theta_mat.at(r, static_cast<std::size_t>(off) + c) = block.at(r, c);
        off += inst.ts[static_cast<std::size_t>(i)] + 1;
    }

    const auto kernel = nullspace_fp(theta_mat);
    if (kernel.empty()) throw Error("Hankel system has full column rank");  // cols > rows
    const auto& b = kernel.front();

    DirichletSolution sol;
    sol.bs.reserve(static_cast<std::size_t>(n));
    RatFunc sum = RatFunc::zero(p);
    off = 0;
    for (int i = 0; i < n; ++i) {
        const int len = inst.ts[static_cast<std::size_t>(i)] + 1;
        std::vector<std::uint32_t> coeffs(b.begin() + off, b.begin() + off + len);
        off += len;
        Poly bi(p, std::move(coeffs));
        sum = sum + RatFunc(bi) * tail_to_ratfunc(inst.thetas[static_cast<std::size_t>(i)]);
        sol.bs.push_back(std::move(bi));
    }
    auto [ipart, frac] = split_integer_fractional(sum);
    sol.a = std::move(ipart);
    sol.achieved = frac.abs();
    return sol;
}

bool dirichlet_verify(const DirichletInstance& inst, const DirichletSolution& sol) {
    if (sol.bs.size() != inst.thetas.size()) throw DimensionMismatch();
    const std::uint32_t p = inst.field.p();
    const int n = inst.n();

    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
        const Poly& bi = sol.bs[static_cast<std::size_t>(i)];
        if (!bi.is_zero()) {
            nonzero = true;
            if (bi.degree_nonzero() > inst.ts[static_cast<std::size_t>(i)]) return false;
        }
    }
    if (!nonzero) return false;

    RatFunc sum = RatFunc::zero(p);
    for (int i = 0; i < n; ++i)
        sum = sum + RatFunc(sol.bs[static_cast<std::size_t>(i)]) *
                        tail_to_ratfunc(inst.thetas[static_cast<std::size_t>(i)]);
    const RatFunc err = sum - RatFunc(sol.a);
    return !(AbsValue::power(-(inst.budget_sum() + n)) < err.abs());
}

}  // namespace ffgeom
