#include "ffgeom/corpus.hpp"

namespace ffgeom {

Poly Corpus::poly(std::uint32_t p, int max_deg, bool allow_zero) {
    for (;;) {
        const int deg = uniform(-1, max_deg);  // -1 encodes the zero draw
        if (deg < 0) {
            if (allow_zero) return Poly(p);
            continue;
        }
        std::vector<std::uint32_t> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = static_cast<std::uint32_t>(uniform(0, static_cast<int>(p) - 1));
        c.back() = static_cast<std::uint32_t>(uniform(1, static_cast<int>(p) - 1));
        return Poly(p, std::move(c));
    }
}

RatFunc Corpus::ratfunc_xden(std::uint32_t p, int max_num_deg, int max_den_pow) {
    const Poly num = poly(p, max_num_deg);
    const int k = uniform(0, max_den_pow);
    return RatFunc(num, Poly::x_power(p, k));
}

LaurentTail Corpus::tail(std::uint32_t p, int max_len) {
    const int len = uniform(0, max_len);
    std::vector<std::uint32_t> a(static_cast<std::size_t>(len));
    for (auto& v : a) v = static_cast<std::uint32_t>(uniform(0, static_cast<int>(p) - 1));
    return LaurentTail(p, std::move(a));
}

LatticeBasis Corpus::lattice(const FieldSpec& field, int d, int max_deg, int max_den_pow) {
    for (;;) {
        KMatrix g(field.p(), static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                g.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    ratfunc_xden(field.p(), max_deg, max_den_pow);
        if (k_det(g).is_zero()) continue;
        return LatticeBasis(field, std::move(g));
    }
}

LatticeBasis Corpus::unimodular_lattice(const FieldSpec& field, int d, int spread) {
    const std::uint32_t p = field.p();
    const std::size_t n = static_cast<std::size_t>(d);
    KMatrix g = KMatrix::identity(p, n);

    auto elementary_r = [&]() {
        KMatrix e = KMatrix::identity(p, n);
        const int i = uniform(0, d - 1);
        int j = uniform(0, d - 2);
        if (j >= i) ++j;
        e.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            RatFunc(poly(p, std::max(1, spread / 2)));
        return e;
    };
    auto unit_o = [&]() {
        // unit lower triangular with entries in x^{-1}O
        KMatrix e = KMatrix::identity(p, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (uniform(0, 1))
                    e.at(i, j) = RatFunc(poly(p, 0), Poly::x_power(p, uniform(1, 2)));
        return e;
    };
    auto diag_a = [&]() {
        std::vector<int> a(n, 0);
        int s = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            a[i] = uniform(-spread, spread);
            s += a[i];
        }
        a[n - 1] = -s;
        return KMatrix::diag_x_powers(p, a);
    };

    g = k_mul(g, elementary_r());
    g = k_mul(g, unit_o());
    g = k_mul(g, diag_a());
    g = k_mul(g, elementary_r());
    return LatticeBasis(field, std::move(g));
}

ConvexBody Corpus::volume0_body(const FieldSpec& field, int d) {
    LatticeBasis L = unimodular_lattice(field, d, 2);
    return ConvexBody(field, L.basis());
}

ConvexBody Corpus::body_with_volume(const FieldSpec& field, int d, int volume_exponent) {
    ConvexBody c = volume0_body(field, d);
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    int left = volume_exponent;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        e[i] = uniform(std::min(0, left), std::max(0, left));
        left -= e[i];
    }
    e.back() = left;
    return ConvexBody(field, k_mul(KMatrix::diag_x_powers(field.p(), e), c.shape()));
}

MuInstance Corpus::mu_instance(const FieldSpec& field, int d, int max_h) {
    const LaurentTail th = tail(field.p(), max_h);
    const LaurentTail ph = d == 3 ? tail(field.p(), max_h) : LaurentTail(field.p());
    return MuInstance::make(field, d, th, ph);
}

DirichletInstance Corpus::dirichlet_instance(const FieldSpec& field, int max_n, int max_t,
                                             int max_tail) {
    const int n = uniform(1, max_n);
    std::vector<LaurentTail> thetas;
    std::vector<int> ts;
    for (int i = 0; i < n; ++i) {
        thetas.push_back(tail(field.p(), max_tail));
        ts.push_back(uniform(0, max_t));
    }
    return DirichletInstance::make(field, std::move(thetas), std::move(ts));
}

}  // namespace ffgeom
