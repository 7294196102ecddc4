#include "ffgeom/selftest.hpp"

#include <functional>
#include <ostream>

#include "ffgeom/corpus.hpp"
#include "ffgeom/mordell.hpp"
#include "ffgeom/parse.hpp"

namespace ffgeom {

namespace {

bool check_ultrametric(Corpus& rng) {
    for (std::uint32_t p : {2u, 3u}) {
        for (int i = 0; i < 5000; ++i) {
            const RatFunc f = rng.ratfunc_xden(p, 5, 3);
            const RatFunc g = rng.ratfunc_xden(p, 5, 3);
            const AbsValue af = f.abs(), ag = g.abs();
            const AbsValue as = (f + g).abs();
            const AbsValue mx = af < ag ? ag : af;
            if (mx < as) return false;
            if (af != ag && as != mx) return false;
            if ((f * g).abs() != af * ag) return false;
        }
    }
    return true;
}

bool check_rho_pi_split(Corpus& rng) {
    for (std::uint32_t p : {2u, 3u}) {
        for (int i = 0; i < 2000; ++i) {
            const RatFunc f = rng.ratfunc_xden(p, 5, 3);
            if (!f.is_zero()) {
                auto [rho, pi] = rho_pi(f);
                if (pi.abs() != AbsValue::one()) return false;
                if (RatFunc::x_power(p, rho) * pi != f) return false;
            }
            auto [ip, fr] = split_integer_fractional(f);
            if (RatFunc(ip) + fr != f) return false;
            if (!(fr.abs() < AbsValue::one())) return false;
        }
    }
    return true;
}

bool check_parser_roundtrip(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 2000; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const Poly num = rng.poly(F.p(), 6);
        const Poly den = rng.nonzero_poly(F.p(), 4);
        const RatFunc f(num, den);
        if (parse_ratfunc(F, format_ratfunc(f)) != f) return false;
    }
    return true;
}

bool check_column_reduce(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 150; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const int d = rng.uniform(2, 4);
        PolyMatrix m(F.p(), static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    rng.poly(F.p(), 6);
        const Poly det = poly_mat_det(m);
        if (det.is_zero()) {
            --i;
            continue;
        }
        const ColumnReducedForm crf = column_reduce(m);
        if (poly_mat_mul(m, crf.transform) != crf.reduced) return false;
        const Poly tdet = poly_mat_det(crf.transform);
        if (!tdet.is_one()) return false;
        if (fp_rank(leading_coefficient_matrix(crf.reduced, crf.col_degrees)) !=
            static_cast<std::size_t>(d))
            return false;
        int sum = 0;
        for (int e : crf.col_degrees) sum += e;
        if (sum != det.degree_nonzero()) return false;
        if (!std::is_sorted(crf.col_degrees.begin(), crf.col_degrees.end())) return false;
    }
    return true;
}

bool check_fp_linalg(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 300; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 5));
        const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 5));
        FpMatrix m(F.p(), rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.at(r, c) = static_cast<std::uint32_t>(rng.uniform(0, static_cast<int>(F.p()) - 1));
        const auto basis = nullspace_fp(m);
        if (fp_rank(m) + basis.size() != cols) return false;
        for (const auto& v : basis)
            for (std::size_t r = 0; r < rows; ++r) {
                std::uint64_t acc = 0;
                for (std::size_t c = 0; c < cols; ++c) acc += static_cast<std::uint64_t>(m.at(r, c)) * v[c];
                if (acc % F.p() != 0) return false;
            }
        // a solvable system: right-hand side from a random vector
        std::vector<std::uint32_t> x(cols);
        for (auto& v : x) v = static_cast<std::uint32_t>(rng.uniform(0, static_cast<int>(F.p()) - 1));
        std::vector<std::uint32_t> rhs(rows, 0);
        for (std::size_t r = 0; r < rows; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < cols; ++c) acc += static_cast<std::uint64_t>(m.at(r, c)) * x[c];
            rhs[r] = static_cast<std::uint32_t>(acc % F.p());
        }
        const auto sol = solve_fp(m, rhs);
        if (!sol) return false;
        for (std::size_t r = 0; r < rows; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < cols; ++c) acc += static_cast<std::uint64_t>(m.at(r, c)) * (*sol)[c];
            if (acc % F.p() != rhs[r] % F.p()) return false;
        }
    }
    return true;
}

bool check_hankel_convolution(Corpus& rng) {
    FieldSpec f3(3);
    for (int i = 0; i < 200; ++i) {
        const std::uint32_t p = 3;
        const LaurentTail theta = rng.tail(p, 6);
        const Poly N = rng.poly(p, 5);
        const int m = 6;
        const FpMatrix H = hankel_block(p, theta, 1, m, N.is_zero() ? 1 : N.degree_nonzero() + 1);
        const RatFunc prod = RatFunc(N) * tail_to_ratfunc(theta);
        const LaurentTail frac = tail_of(prod);
        for (int s = 1; s <= m; ++s) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < H.cols(); ++c)
                acc += static_cast<std::uint64_t>(H.at(static_cast<std::size_t>(s) - 1, c)) *
                       N.coeff(static_cast<int>(c));
            if (acc % p != frac.coeff(s)) return false;
        }
    }
    return true;
}

bool check_minima_identities(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 120; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const int d = rng.uniform(2, 4);
        const LatticeBasis L = rng.lattice(F, d, 5, 2);
        const MinimaProfile mp = minima(L);
        int sum = 0;
        for (int e : mp.exponents) sum += e;
        if (sum != L.det_exponent()) return false;

        std::vector<std::vector<RatFunc>> cols;
        for (int j = 0; j < d; ++j) {
            cols.push_back(mp.reduced_basis.col(static_cast<std::size_t>(j)));
            if (vec_norm(std::span<const RatFunc>(cols.back())) !=
                AbsValue::power(mp.exponents[static_cast<std::size_t>(j)]))
                return false;
        }
        if (!wedge_orthogonality(cols)) return false;

        // u g h = diag(x^e) with u over O, h unimodular over R
        const KMatrix lhs = k_mul(mp.transform_u, k_mul(L.basis(), KMatrix::from_poly(mp.transform_h)));
        if (lhs != KMatrix::diag_x_powers(F.p(), mp.exponents)) return false;
        for (std::size_t r = 0; r < lhs.rows(); ++r)
            for (std::size_t c = 0; c < lhs.cols(); ++c)
                if (AbsValue::one() < mp.transform_u.at(r, c).abs()) return false;
        if (k_det(mp.transform_u).abs() != AbsValue::one()) return false;
        if (!poly_mat_det(mp.transform_h).is_constant()) return false;
    }
    return true;
}

bool check_covering(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 10; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const int d = rng.uniform(2, 3);
        const LatticeBasis L = rng.unimodular_lattice(F, d, 2);
        const int ed = minima(L).exponents.back();
        const int r = covrad_cube(L).exponent();
        if (r != ed - 1) return false;
        const int prec = std::abs(r) + ed + 2;
        if (!covering_oracle(L, r, prec)) return false;
        if (covering_oracle(L, r - 1, prec + 1)) return false;
    }
    return true;
}

bool check_bodies(Corpus& rng) {
    FieldSpec f3(3);
    for (int i = 0; i < 40; ++i) {
        const int d = rng.uniform(2, 3);
        const LatticeBasis L = rng.unimodular_lattice(f3, d, 2);
        const ConvexBody C = rng.body_with_volume(f3, d, rng.uniform(-(d - 1), 1));
        // nonzero point of h^{-1}L in O^d when Vol >= q^{-(d-1)}
        const std::vector<int> em = minima_body(L, C);
        int sum = 0;
        for (int e : em) sum += e;
        if (sum != L.det_exponent() - C.volume_exponent()) return false;
        if (em.front() > 0) return false;

        const ConvexBody C0 = rng.volume0_body(f3, d);
        if (covrad_body(LatticeBasis(f3, C0.shape()), C0) != AbsValue::power(-1)) return false;
        if (covrad_body(L, C0) < AbsValue::power(-1)) return false;
    }
    return true;
}

bool check_flags(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 60; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const int d = rng.uniform(2, 3);
        const LatticeBasis L = rng.unimodular_lattice(F, d, 2);
        const MinkowskiFlag flag = minkowski_flag(L, WeightVector::zero(d));
        for (const AbsValue& w : flag.prefix_wedge)
            if (AbsValue::one() < w) return false;

        std::vector<int> a(static_cast<std::size_t>(d), 0);
        int s = 0;
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
            a[j] = rng.uniform(-3, 3);
            s += a[j];
        }
        a.back() = -s;
        const MinimaProfile wm = weighted_minima(L, WeightVector(a));
        int sum = 0;
        for (int e : wm.exponents) sum += e;
        if (sum != 0) return false;
    }
    return true;
}

bool check_shift_search(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 30; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const int d = rng.uniform(2, 3);
        const LatticeBasis L = rng.unimodular_lattice(F, d, 2);
        const ShiftSearchResult res = find_wellrounded_shift(L, 10);
        if (!res.found) return false;
        if (!is_well_rounded(apply_weight(L, *res.found))) return false;
    }
    return true;
}

bool check_mu_oracle_equivalence(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 30; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const int d = rng.uniform(2, 3);
        const MuInstance inst = rng.mu_instance(F, d, 3);
        const MuResult exact = mu_exact(inst);
        const MuResult oracle = mu_brute_oracle(inst, inst.h + 1);
        if (exact.value != oracle.value) return false;
        if (AbsValue::power(-d) < exact.value) return false;
    }
    return true;
}

bool check_mu_d2_trivial(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 20; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const MuInstance inst = rng.mu_instance(F, 2, 6);
        if (mu_exact(inst).value != AbsValue::power(-2)) return false;
    }
    return true;
}

bool check_mordell(Corpus& rng) {
    FieldSpec f3(3);
    for (int i = 0; i < 8; ++i) {
        const int d = rng.uniform(2, 3);
        const LatticeBasis L = rng.unimodular_lattice(f3, d, 1);
        auto [a, box] = wr_box_certificate(L, 10);
        if (!is_admissible(L, box)) return false;
        if (box.volume_exponent() != -d) return false;

        const KappaResult k = kappa_search(L, 6);
        if (!k.best || k.best->volume_exponent() != -d || !k.exhausted) return false;

        // scaling equivariance of admissibility
        std::vector<int> w(static_cast<std::size_t>(d), 0);
        int s = 0;
        for (std::size_t j = 0; j + 1 < w.size(); ++j) {
            w[j] = rng.uniform(-2, 2);
            s += w[j];
        }
        w.back() = -s;
        const WeightVector wa(w);
        Box shifted;
        for (std::size_t j = 0; j < w.size(); ++j)
            shifted.exponents.push_back(box.exponents[j] + w[j]);
        if (is_admissible(apply_weight(L, wa), shifted) != is_admissible(L, box)) return false;
    }
    return true;
}

bool check_dirichlet(Corpus& rng) {
    FieldSpec f2(2), f3(3);
    for (int i = 0; i < 100; ++i) {
        const FieldSpec& F = i % 2 ? f2 : f3;
        const DirichletInstance inst = rng.dirichlet_instance(F, 3, 5, 12);
        const DirichletSolution sol = dirichlet_solve(inst);
        if (!dirichlet_verify(inst, sol)) return false;
    }
    return true;
}

}  // namespace

int selftest_run(std::ostream& out, std::uint64_t seed) {
    struct Suite {
        const char* name;
        std::function<bool(Corpus&)> fn;
    };
    const Suite suites[] = {
        {"ultrametric", check_ultrametric},
        {"rho_pi_split", check_rho_pi_split},
        {"parser_roundtrip", check_parser_roundtrip},
        {"column_reduce", check_column_reduce},
        {"fp_linear_algebra", check_fp_linalg},
        {"hankel_convolution", check_hankel_convolution},
        {"minima_identities", check_minima_identities},
        {"covering_radius", check_covering},
        {"convex_bodies", check_bodies},
        {"minkowski_flags", check_flags},
        {"wellrounded_shift", check_shift_search},
        {"mu_oracle_equivalence", check_mu_oracle_equivalence},
        {"mu_dimension2", check_mu_d2_trivial},
        {"mordell_boxes", check_mordell},
        {"dirichlet", check_dirichlet},
    };
    int failures = 0;
    for (const Suite& s : suites) {
        Corpus rng(seed ^ std::hash<std::string>{}(s.name));
        bool ok = false;
        try {
            ok = s.fn(rng);
        } catch (const std::exception& e) {
            out << "FAIL " << s.name << " (exception: " << e.what() << ")\n";
            ++failures;
            continue;
        }
        if (ok) {
            out << "ok " << s.name << '\n';
        } else {
            out << "FAIL " << s.name << '\n';
            ++failures;
        }
    }
    return failures;
}

}  // namespace ffgeom
