#pragma once

#include <vector>

#include "ffgeom/absval.hpp"
#include "ffgeom/fp.hpp"
#include "ffgeom/poly.hpp"
#include "ffgeom/tail.hpp"

namespace ffgeom {

/// Targets theta_i in x^{-1}O (finite tails) with degree budgets t_i >= 0.
struct DirichletInstance {
    FieldSpec field;
    std::vector<LaurentTail> thetas;
    std::vector<int> ts;

    static DirichletInstance make(const FieldSpec& field, std::vector<LaurentTail> thetas,
                                  std::vector<int> ts);
    int n() const { return static_cast<int>(thetas.size()); }
    int budget_sum() const;
};

struct DirichletSolution {
    std::vector<Poly> bs;
    Poly a;
    AbsValue achieved;  // exact |sum b_i theta_i - a|
};

/// Stacks one Hankel block per theta_i into the (sum t_i + n - 1) x
/// (sum t_i + n) matrix, takes the first right-kernel basis vector as the
/// b-coefficient blocks, and sets a to the polynomial part of
/// sum b_i theta_i. The kernel is nontrivial by the column count.
DirichletSolution dirichlet_solve(const DirichletInstance& inst);

/// Recomputes |b_i| <= q^{t_i}, b != 0, and
/// |sum b_i theta_i - a| <= q^{-(sum t_i + n)} exactly.
bool dirichlet_verify(const DirichletInstance& inst, const DirichletSolution& sol);

}  // namespace ffgeom
