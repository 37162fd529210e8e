#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specfilt/polyring.hpp"

using namespace specfilt;

TEST_CASE("bigint arithmetic basics") {
    BigInt a(123456789012345LL), b(-987654321LL);
    CHECK((a + b).to_string() == "123455801358024");
    CHECK((a * b).to_string() == "-121932631124827861592745");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK((q * b + r) == a);
    CHECK(BigInt::from_string("-340282366920938463463374607431768211456").to_string() ==
          "-340282366920938463463374607431768211456");
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)).to_string() == "12");
}

TEST_CASE("rational arithmetic and normalization") {
    Rational h(BigInt(1), BigInt(2)), t(BigInt(2), BigInt(6));
    CHECK(t.to_string() == "1/3");
    CHECK((h + t).to_string() == "5/6");
    CHECK((h * t).to_string() == "1/6");
    CHECK((h / t).to_string() == "3/2");
    CHECK((h - h).is_zero());
    CHECK(Rational(BigInt(-4), BigInt(-8)).to_string() == "1/2");
    CHECK(Rational(BigInt(3), BigInt(-9)).to_string() == "-1/3");
}

static PolyRing qq_xy(MonomialOrder o = MonomialOrder::grevlex) {
    return PolyRing({"x", "y"}, CoefficientField::rationals(), o);
}

TEST_CASE("parse_poly canonical forms") {
    PolyRing R = qq_xy();
    Polynomial p = parse_poly("x^2 + 2*x*y", R);
    CHECK(p.terms().size() == 2);
    CHECK(p.to_string() == "x^2 + 2*x*y");

    CHECK(parse_poly("x - x", R).is_zero());

    PolyRing F3({"x"}, CoefficientField::prime(3));
    CHECK(parse_poly("3*x", F3).is_zero());
    CHECK(parse_poly("(x+1)^3", F3).to_string() == "x^3 + 1");

    CHECK_THROWS_AS(parse_poly("x + z", R), ParseError);
    CHECK_THROWS_AS(parse_poly("x + ", R), ParseError);
    CHECK_THROWS_AS(parse_poly("1/3", F3), ParseError);
    CHECK(parse_poly("1/2*x - y", R).to_string() == "1/2*x - y");
}

TEST_CASE("parse error carries position") {
    PolyRing R = qq_xy();
    try {
        parse_poly("x +\n  qq", R);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 3);
    }
}

TEST_CASE("arith examples") {
    PolyRing R = qq_xy();
    Polynomial x = R.var(0), y = R.var(1);
    CHECK(arith(x + y, x - y, ArithOp::mul) == x * x - y * y);
    Polynomial p = parse_poly("x^2 - 3*y + 1", R);
    CHECK(arith(p, R.zero(), ArithOp::add) == p);

    PolyRing F2({"x"}, CoefficientField::prime(2));
    Polynomial q = parse_poly("x + 1", F2);
    CHECK((q * q).to_string() == "x^2 + 1");
}

TEST_CASE("normal_form examples") {
    PolyRing R = qq_xy();
    Polynomial f = parse_poly("x^2*y", R);
    CHECK(normal_form(f, {parse_poly("x^2", R)}).is_zero());
    CHECK(normal_form(parse_poly("x^2*y + y", R), {parse_poly("x^2", R)}).to_string() == "y");

    // hand division oracle, lex x > y: LT(y - x) = -x, so x*y - 1 -> y^2 - 1
    PolyRing L = qq_xy(MonomialOrder::lex);
    Polynomial r = normal_form(parse_poly("x*y - 1", L), {parse_poly("y - x", L)});
    CHECK(r == parse_poly("y^2 - 1", L));
}

TEST_CASE("normal_form stable under adding multiples of the divisor") {
    PolyRing R = qq_xy();
    std::mt19937 rng(7);
    auto rand_poly = [&](const PolyRing& ring) {
        std::vector<Term> ts;
        std::uniform_int_distribution<int> dc(-3, 3), de(0, 2);
        for (int t = 0; t < 4; ++t) {
            Monomial m(ring.nvars());
            for (size_t i = 0; i < ring.nvars(); ++i) m.e[i] = de(rng);
            int c = dc(rng);
            if (c) ts.push_back({m, Rational(c)});
        }
        return Polynomial(ring, ts);
    };
    for (int it = 0; it < 50; ++it) {
        Polynomial f = rand_poly(R), g = rand_poly(R), d = rand_poly(R);
        if (d.is_zero()) continue;
        CHECK(normal_form(f + g * d, {d}) == normal_form(f, {d}));
    }
}

// order laws, exhaustive on monomials of degree <= 4 in 3 variables
TEST_CASE("order laws") {
    for (auto ord : {MonomialOrder::lex, MonomialOrder::grevlex}) {
        PolyRing R({"x", "y", "z"}, CoefficientField::rationals(), ord);
        std::vector<Monomial> ms;
        for (uint32_t a = 0; a <= 4; ++a)
            for (uint32_t b = 0; a + b <= 4; ++b)
                for (uint32_t c = 0; a + b + c <= 4; ++c) {
                    Monomial m(3);
                    m.e = {a, b, c};
                    ms.push_back(m);
                }
        Monomial one(3);
        for (const auto& a : ms) {
            CHECK(R.mono_cmp(a, a) == 0);
            if (!(a == one)) CHECK(R.mono_cmp(a, one) > 0);  // 1 is minimal
            for (const auto& b : ms) {
                int ab = R.mono_cmp(a, b);
                CHECK(ab == -R.mono_cmp(b, a));  // antisymmetry / totality
                if (a == b) continue;
                CHECK(ab != 0);
                for (const auto& c : ms) {
                    // multiplicative
                    if (a.deg() + c.deg() <= 8 && b.deg() + c.deg() <= 8)
                        CHECK(R.mono_cmp(a.mul(c), b.mul(c)) == ab);
                    // transitivity
                    if (ab > 0 && R.mono_cmp(b, c) > 0) CHECK(R.mono_cmp(a, c) > 0);
                }
            }
        }
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    std::mt19937 rng(42);
    std::vector<PolyRing> rings = {
        qq_xy(), qq_xy(MonomialOrder::lex),
        PolyRing({"x", "y", "z"}, CoefficientField::prime(7))};
    std::uniform_int_distribution<int> dc(-9, 9), de(0, 3), dn(1, 5);
    for (const auto& R : rings) {
        for (int it = 0; it < 60; ++it) {
            std::vector<Term> ts;
            int n = dn(rng);
            for (int t = 0; t < n; ++t) {
                Monomial m(R.nvars());
                for (size_t i = 0; i < R.nvars(); ++i) m.e[i] = de(rng);
                int c = dc(rng);
                if (c) ts.push_back({m, Rational(BigInt(c), BigInt(1 + de(rng)))});
            }
            Polynomial p(R, ts);
            CHECK(parse_poly(p.to_string(), R) == p);
        }
    }
}

TEST_CASE("degree cap is enforced") {
    PolyRing R({"x"}, CoefficientField::rationals());
    Polynomial x = R.var(0);
    Polynomial p = parse_poly("x^60000", R);
    CHECK_THROWS_AS(p * p, std::overflow_error);
}
