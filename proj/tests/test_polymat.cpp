#include <doctest.h>

#include <algorithm>

#include "ffgeom/corpus.hpp"
#include "ffgeom/parse.hpp"

using namespace ffgeom;

namespace {

PolyMatrix pm(const FieldSpec& F, std::vector<std::vector<const char*>> rows) {
    PolyMatrix m(F.p(), rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const RatFunc f = parse_ratfunc(F, rows[i][j]);
            REQUIRE(f.is_polynomial());
            m.at(i, j) = f.num();
        }
    return m;
}

}  // namespace

TEST_CASE("column_reduce on the identity") {
    FieldSpec F(3);
    const auto crf = column_reduce(PolyMatrix::identity(3, 2));
    CHECK(crf.col_degrees == std::vector<int>{0, 0});
    CHECK(crf.reduced == PolyMatrix::identity(3, 2));
    CHECK(crf.transform == PolyMatrix::identity(3, 2));
}

TEST_CASE("column_reduce reaches constant matrix for [[x,1],[1,0]]") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        FieldSpec F(p);
        const PolyMatrix m = pm(F, {{"x", "1"}, {"1", "0"}});
        const auto crf = column_reduce(m);
        CHECK(crf.col_degrees == std::vector<int>{0, 0});
        CHECK(poly_mat_mul(m, crf.transform) == crf.reduced);
        CHECK(poly_mat_det(crf.transform).is_one());
    }
}

TEST_CASE("column_reduce keeps an already reduced diagonal") {
    FieldSpec F(3);
    const PolyMatrix m = pm(F, {{"x^3", "0"}, {"0", "x"}});
    const auto crf = column_reduce(m);
    CHECK(crf.col_degrees == std::vector<int>{1, 3});
    CHECK(poly_mat_mul(m, crf.transform) == crf.reduced);
    // same columns up to order and scalar
    CHECK(crf.reduced.at(1, 0).degree() == 1);
    CHECK(crf.reduced.at(0, 1).degree() == 3);
    CHECK(crf.reduced.at(0, 0).is_zero());
    CHECK(crf.reduced.at(1, 1).is_zero());
}

TEST_CASE("column_reduce rejects singular input") {
    FieldSpec F(2);
    CHECK_THROWS_AS(column_reduce(pm(F, {{"x", "x"}, {"1", "1"}})), SingularMatrix);
    CHECK_THROWS_AS(column_reduce(pm(F, {{"x", "x^2+x"}, {"1", "x+1"}})), SingularMatrix);
}

TEST_CASE("column_reduce invariants on a random corpus") {
    Corpus rng(23);
    FieldSpec f2(2), f3(3);
    int done = 0;
    while (done < 500) {
        const FieldSpec& F = done % 2 ? f2 : f3;
        const int d = rng.uniform(2, 4);
        PolyMatrix m(F.p(), static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = rng.poly(F.p(), 6);
        const Poly det = poly_mat_det(m);
        if (det.is_zero()) continue;
        ++done;
        const auto crf = column_reduce(m);
        REQUIRE(poly_mat_mul(m, crf.transform) == crf.reduced);
        REQUIRE(poly_mat_det(crf.transform).is_one());
        REQUIRE(fp_rank(leading_coefficient_matrix(crf.reduced, crf.col_degrees)) ==
                static_cast<std::size_t>(d));
        REQUIRE(std::is_sorted(crf.col_degrees.begin(), crf.col_degrees.end()));
        int sum = 0;
        for (int e : crf.col_degrees) sum += e;
        REQUIRE(sum == det.degree_nonzero());
    }
}

TEST_CASE("nullspace examples") {
    FpMatrix zero(2, 1, 2);
    CHECK(nullspace_fp(zero).size() == 2);

    FpMatrix eye(2, 2, 2);
    eye.at(0, 0) = eye.at(1, 1) = 1;
    CHECK(nullspace_fp(eye).empty());

    FpMatrix ones(2, 1, 2);
    ones.at(0, 0) = ones.at(0, 1) = 1;
    const auto ns = nullspace_fp(ones);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("solve examples") {
    FpMatrix eye(2, 2, 2);
    eye.at(0, 0) = eye.at(1, 1) = 1;
    CHECK(*solve_fp(eye, {1, 0}) == std::vector<std::uint32_t>{1, 0});

    FpMatrix ones(2, 1, 2);
    ones.at(0, 0) = ones.at(0, 1) = 1;
    CHECK(*solve_fp(ones, {1}) == std::vector<std::uint32_t>{1, 0});

    FpMatrix zero(2, 1, 2);
    CHECK(!solve_fp(zero, {1}).has_value());
    CHECK_THROWS_AS(solve_fp(zero, {1, 0}), DimensionMismatch);
}

TEST_CASE("hankel_block examples") {
    const LaurentTail t(2, {1, 1, 0, 1});
    const FpMatrix m = hankel_block(2, t, 1, 2, 3);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 2) == 0);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(1, 1) == 0);
    CHECK(m.at(1, 2) == 1);

    const FpMatrix z = hankel_block(2, LaurentTail(2), 1, 2, 2);
    CHECK(z == FpMatrix(2, 2, 2));

    const FpMatrix o = hankel_block(2, LaurentTail(2, {1}), 2, 1, 1);
    CHECK(o.at(0, 0) == 0);

    CHECK_THROWS_AS(hankel_block(2, t, 0, 1, 1), BadDimensions);
}

TEST_CASE("hankel convolution matches split_integer_fractional") {
    Corpus rng(31);
    FieldSpec F(3);
    for (int i = 0; i < 200; ++i) {
        const LaurentTail theta = rng.tail(3, 6);
        const Poly N = rng.nonzero_poly(3, 5);
        const int m = 6;
        const FpMatrix H = hankel_block(3, theta, 1, m, N.degree_nonzero() + 1);
        const LaurentTail frac = tail_of(RatFunc(N) * tail_to_ratfunc(theta));
        for (int s = 1; s <= m; ++s) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < H.cols(); ++c)
                acc += static_cast<std::uint64_t>(
                           H.at(static_cast<std::size_t>(s) - 1, c)) *
                       N.coeff(static_cast<int>(c));
            CHECK(acc % 3 == frac.coeff(s));
        }
    }
}

TEST_CASE("poly_mat_det examples") {
    FieldSpec F(3);
    CHECK(poly_mat_det(PolyMatrix::identity(3, 3)).is_one());
    CHECK(poly_mat_det(pm(F, {{"x", "1"}, {"1", "0"}})) == Poly::constant(3, 2));
    CHECK(poly_mat_det(pm(F, {{"x", "0"}, {"0", "x^2"}})) == Poly::x_power(3, 3));
    PolyMatrix rect(3, 1, 2);
    CHECK_THROWS_AS(poly_mat_det(rect), NotSquare);
}
