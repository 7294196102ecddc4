#include <doctest.h>

#include "ffgeom/corpus.hpp"
#include "ffgeom/parse.hpp"

using namespace ffgeom;

namespace {
RatFunc rf(const FieldSpec& F, const char* s) { return parse_ratfunc(F, s); }
}  // namespace

TEST_CASE("field spec validates primality") {
    CHECK_NOTHROW(FieldSpec(2));
    CHECK_NOTHROW(FieldSpec(65521));
    CHECK_THROWS_AS(FieldSpec(1), NotPrime);
    CHECK_THROWS_AS(FieldSpec(4), NotPrime);
    CHECK_THROWS_AS(FieldSpec(65536), NotPrime);
}

TEST_CASE("abs_value examples") {
    FieldSpec F(3);
    CHECK(rf(F, "x^3+1").abs() == AbsValue::power(3));
    CHECK(rf(F, "0").abs() == AbsValue::zero());
    CHECK(rf(F, "x^2/(x^3+1)").abs() == AbsValue::power(-1));
}

TEST_CASE("abs value total order and multiplication") {
    CHECK(AbsValue::zero() < AbsValue::power(-100));
    CHECK(AbsValue::power(-2) < AbsValue::power(1));
    CHECK(AbsValue::power(2) * AbsValue::power(-5) == AbsValue::power(-3));
    CHECK(AbsValue::zero() * AbsValue::power(7) == AbsValue::zero());
    CHECK_THROWS_AS(AbsValue::zero().exponent(), ZeroInput);
}

TEST_CASE("rho_pi examples") {
    FieldSpec F(3);
    {
        auto [r, pi] = rho_pi(rf(F, "x^2"));
        CHECK(r == 2);
        CHECK(pi == RatFunc::one(3));
    }
    {
        auto [r, pi] = rho_pi(rf(F, "(x+1)/x"));
        CHECK(r == 0);
        CHECK(pi == rf(F, "(x+1)/x"));
    }
    {
        auto [r, pi] = rho_pi(rf(F, "1/x^3"));
        CHECK(r == -3);
        CHECK(pi == RatFunc::one(3));
    }
    CHECK_THROWS_AS(rho_pi(RatFunc::zero(3)), ZeroInput);
}

TEST_CASE("split_integer_fractional examples") {
    FieldSpec F(3);
    {
        auto [ip, fr] = split_integer_fractional(rf(F, "(x^2+1)/x"));
        CHECK(ip == Poly::x_power(3, 1));
        CHECK(fr == rf(F, "1/x"));
    }
    {
        auto [ip, fr] = split_integer_fractional(rf(F, "x^3"));
        CHECK(ip == Poly::x_power(3, 3));
        CHECK(fr.is_zero());
    }
    {
        auto [ip, fr] = split_integer_fractional(rf(F, "1/(x+1)"));
        CHECK(ip.is_zero());
        CHECK(fr == rf(F, "1/(x+1)"));
    }
}

TEST_CASE("tail_of examples") {
    FieldSpec F(3);
    {
        const LaurentTail t = tail_of(rf(F, "1/x+1/x^2+1/x^4"));
        CHECK(t.coeffs() == std::vector<std::uint32_t>{1, 1, 0, 1});
        CHECK(t.denom() == 4);
        CHECK(t.abs() == AbsValue::power(-1));
    }
    CHECK(tail_of(rf(F, "x^2")).denom() == 0);
    CHECK_THROWS_AS(tail_of(rf(F, "1/(x+1)")), NotFiniteTail);
}

TEST_CASE("vector and product norms") {
    FieldSpec F(2);
    std::vector<RatFunc> v{rf(F, "x"), rf(F, "1/x")};
    CHECK(vec_norm(v) == AbsValue::power(1));
    std::vector<RatFunc> z{RatFunc::zero(2), RatFunc::zero(2)};
    CHECK(vec_norm(z) == AbsValue::zero());
    std::vector<RatFunc> w{rf(F, "1/x^2"), rf(F, "1/x^2")};
    CHECK(vec_norm(w) == AbsValue::power(-2));

    std::vector<RatFunc> a{rf(F, "1/x"), rf(F, "1/x"), rf(F, "1/x")};
    CHECK(product_norm(a) == AbsValue::power(-3));
    std::vector<RatFunc> b{rf(F, "x"), RatFunc::zero(2)};
    CHECK(product_norm(b) == AbsValue::zero());
    std::vector<RatFunc> c{rf(F, "x^2"), rf(F, "1/x")};
    CHECK(product_norm(c) == AbsValue::power(1));

    std::vector<RatFunc> empty;
    CHECK_THROWS_AS(vec_norm(std::span<const RatFunc>(empty)), EmptyVector);
    CHECK_THROWS_AS(product_norm(std::span<const RatFunc>(empty)), EmptyVector);
}

TEST_CASE("parser examples and errors") {
    FieldSpec F(3);
    const RatFunc theta = rf(F, "1/x+1/x^2+1/x^4");
    CHECK(theta == RatFunc(parse_ratfunc(F, "x^3+x^2+1").num(), Poly::x_power(3, 4)));
    CHECK(rf(F, "0") == RatFunc::zero(3));
    CHECK_THROWS_AS(rf(F, "x^2/0"), ZeroDenominator);
    CHECK_THROWS_AS(rf(F, "x+"), ParseError);
    CHECK_THROWS_AS(rf(F, "(x"), ParseError);
    CHECK_THROWS_AS(rf(F, "y"), ParseError);
    try {
        rf(F, "1/x + @");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6);
    }
    // coefficients reduce mod p, '*' optional
    CHECK(rf(F, "4x") == rf(F, "x"));
    CHECK(rf(F, "2*x^2") == rf(F, "2x^2"));
    CHECK(rf(F, " x + 1 ") == rf(F, "x+1"));
    CHECK(rf(F, "x-1") == rf(F, "x+2"));
}

TEST_CASE("parser round trip on random canonical elements") {
    Corpus rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        FieldSpec F(p);
        for (int i = 0; i < 500; ++i) {
            const RatFunc f(rng.poly(p, 6), rng.nonzero_poly(p, 5));
            CAPTURE(format_ratfunc(f));
            CHECK(parse_ratfunc(F, format_ratfunc(f)) == f);
        }
    }
}

TEST_CASE("ultrametric and multiplicativity properties") {
    Corpus rng(11);
    for (std::uint32_t p : {2u, 3u}) {
        for (int i = 0; i < 5000; ++i) {
            const RatFunc f = rng.ratfunc_xden(p, 5, 3);
            const RatFunc g = rng.ratfunc_xden(p, 5, 3);
            const AbsValue af = f.abs(), ag = g.abs();
            const AbsValue as = (f + g).abs();
            const AbsValue mx = af < ag ? ag : af;
            CHECK(as <= mx);
            if (af != ag) CHECK(as == mx);
            CHECK((f * g).abs() == af * ag);
        }
    }
}

TEST_CASE("laurent coefficient extraction") {
    FieldSpec F(3);
    // 1/(x-1) = 1/x + 1/x^2 + 1/x^3 + ...
    const RatFunc f = rf(F, "1/(x+2)");
    const auto c = laurent_coeff_range(f, -4, 0);
    CHECK(c == std::vector<std::uint32_t>{1, 1, 1, 1, 0});
    // polynomial part appears at nonnegative indices
    const auto d = laurent_coeff_range(rf(F, "x^2+2+1/x"), -2, 2);
    CHECK(d == std::vector<std::uint32_t>{0, 1, 2, 0, 1});
}
