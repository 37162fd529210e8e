#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specfilt/groebner.hpp"

using namespace specfilt;

namespace {

PolyRing QQ(std::vector<std::string> vars, MonomialOrder o = MonomialOrder::grevlex) {
    return PolyRing(std::move(vars), CoefficientField::rationals(), o);
}

Ideal ideal(const PolyRing& R, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(g, R));
    return Ideal(R, std::move(ps));
}

// test-side oracle: intersection of monomial ideals via pairwise lcm
Ideal monomial_intersect_oracle(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> out;
    for (const auto& f : I.gens())
        for (const auto& g : J.gens()) {
            Monomial l = Monomial::lcm(f.leading().m, g.leading().m);
            out.push_back(I.ring().monomial(l, Rational(1)));
        }
    return Ideal(I.ring(), std::move(out));
}

// test-side oracle: saturation of a monomial ideal by a variable drops that
// variable's exponents
Ideal monomial_saturate_oracle(const Ideal& I, size_t var) {
    std::vector<Polynomial> out;
    for (const auto& f : I.gens()) {
        Monomial m = f.leading().m;
        m.e[var] = 0;
        out.push_back(I.ring().monomial(m, Rational(1)));
    }
    return Ideal(I.ring(), std::move(out));
}

// test-side oracle: dim of a squarefree monomial quotient = largest face of
// the Stanley-Reisner complex (subsets containing no generator's support)
size_t stanley_reisner_dim_oracle(const PolyRing& R, const std::vector<Monomial>& gens) {
    size_t n = R.nvars(), best = 0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool face = true;
        for (const auto& g : gens) {
            bool sub = true;
            for (size_t i = 0; i < n && sub; ++i)
                if (g.e[i] && !((s >> i) & 1)) sub = false;
            if (sub) { face = false; break; }
        }
        if (face) best = std::max(best, static_cast<size_t>(__builtin_popcount(s)));
    }
    return best;
}

Polynomial spoly_of(const PolyRing& R, const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading().m, g.leading().m);
    return f.mono_mul(l.div(f.leading().m), R.cdiv(Rational(1), f.leading().c)) -
           g.mono_mul(l.div(g.leading().m), R.cdiv(Rational(1), g.leading().c));
}

}  // namespace

TEST_CASE("groebner basis examples") {
    PolyRing R = QQ({"x", "y"});
    CHECK(ideal(R, {"x"}).groebner_basis() == std::vector<Polynomial>{parse_poly("x", R)});

    // hand Gaussian elimination: (x+y, x-y) = (x, y)
    auto gb = ideal(R, {"x + y", "x - y"}).groebner_basis();
    CHECK(gb.size() == 2);
    CHECK(ideal_equal(ideal(R, {"x + y", "x - y"}), ideal(R, {"x", "y"})));

    // twisted cubic eliminant: y^3 - z^2 in the lex basis
    PolyRing R3 = QQ({"x", "y", "z"}, MonomialOrder::lex);
    auto gb3 = ideal(R3, {"x^2 - y", "x^3 - z"}).groebner_basis();
    bool found = false;
    Polynomial target = parse_poly("y^3 - z^2", R3);
    for (const auto& g : gb3)
        if (g == target) found = true;
    CHECK(found);
}

TEST_CASE("groebner soundness: S-polynomials and generators reduce to zero") {
    PolyRing R = QQ({"x", "y", "z"});
    std::vector<Ideal> corpus = {
        ideal(R, {"x*y", "y*z"}),
        ideal(R, {"x^2 - y*z", "x*z - y^2"}),
        ideal(R, {"x^3 - 1", "y^2 - x", "z - x*y"}),
        ideal(R, {"x + y + z", "x*y + y*z + x*z", "x*y*z - 1"}),
    };
    for (const auto& I : corpus) {
        const auto& gb = I.groebner_basis();
        for (const auto& g : I.gens()) CHECK(normal_form(g, gb).is_zero());
        for (size_t i = 0; i < gb.size(); ++i)
            for (size_t j = i + 1; j < gb.size(); ++j)
                CHECK(normal_form(spoly_of(R, gb[i], gb[j]), gb).is_zero());
    }
}

TEST_CASE("ideal_contains examples") {
    PolyRing R = QQ({"x", "y"});
    CHECK(ideal_contains(ideal(R, {"x", "y"}), ideal(R, {"x^2 + y"})));
    CHECK_FALSE(ideal_contains(ideal(R, {"x"}), ideal(R, {"y"})));
    // x^4 - y^2 = (x^2 - y)(x^2 + y)
    CHECK(ideal_contains(ideal(R, {"x^2 - y"}), ideal(R, {"x^4 - y^2"})));
}

TEST_CASE("membership agreement on generator combinations") {
    PolyRing R = QQ({"x", "y"});
    Ideal I = ideal(R, {"x^2 - y", "x*y + 1"});
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dc(-2, 2), de(0, 1);
    for (int it = 0; it < 40; ++it) {
        Polynomial f = R.zero();
        for (const auto& g : I.gens()) {
            Monomial m(2);
            m.e = {static_cast<uint32_t>(de(rng)), static_cast<uint32_t>(de(rng))};
            f = f + g.mono_mul(m, Rational(dc(rng)));
        }
        CHECK(ideal_contains(I, Ideal(R, {f})));
    }
}

TEST_CASE("ideal_intersect") {
    PolyRing R = QQ({"x", "y"});
    Ideal xi = ideal(R, {"x"}), yi = ideal(R, {"y"});
    CHECK(ideal_equal(ideal_intersect(xi, yi), ideal(R, {"x*y"})));
    CHECK(ideal_equal(ideal_intersect(xi, xi), xi));
    // comaximal: (x,y) cap (x-1) = ((x-1)x, (x-1)y)
    Ideal lhs = ideal_intersect(ideal(R, {"x", "y"}), ideal(R, {"x - 1"}));
    CHECK(ideal_equal(lhs, ideal(R, {"(x - 1)*x", "(x - 1)*y"})));
}

TEST_CASE("intersection is the categorical meet on random monomial ideals") {
    PolyRing R = QQ({"x", "y", "z"});
    std::mt19937 rng(5);
    std::uniform_int_distribution<uint32_t> de(0, 2);
    for (int it = 0; it < 15; ++it) {
        auto mk = [&] {
            std::vector<Polynomial> gs;
            for (int k = 0; k < 2; ++k) {
                Monomial m(3);
                m.e = {de(rng), de(rng), de(rng)};
                if (!m.is_one()) gs.push_back(R.monomial(m, Rational(1)));
            }
            return Ideal(R, gs);
        };
        Ideal I = mk(), J = mk();
        if (I.gens().empty() || J.gens().empty()) continue;
        Ideal meet = ideal_intersect(I, J);
        CHECK(ideal_contains(I, meet));
        CHECK(ideal_contains(J, meet));
        Ideal oracle = monomial_intersect_oracle(I, J);
        CHECK(ideal_equal(meet, oracle));
        CHECK(ideal_contains(meet, oracle));
    }
}

TEST_CASE("intersection meet properties on non-monomial pairs") {
    PolyRing R = QQ({"x", "y"});
    std::vector<std::pair<Ideal, Ideal>> pairs = {
        {ideal(R, {"x^2 - y"}), ideal(R, {"x", "y"})},
        {ideal(R, {"x + y", "x*y"}), ideal(R, {"x - y"})},
        {ideal(R, {"x^2 + 1"}), ideal(R, {"y^2 - x"})},
    };
    for (const auto& [I, J] : pairs) {
        Ideal meet = ideal_intersect(I, J);
        CHECK(ideal_contains(I, meet));
        CHECK(ideal_contains(J, meet));
        // the product ideal sits below the meet
        std::vector<Polynomial> prod;
        for (const auto& f : I.gens())
            for (const auto& g : J.gens()) prod.push_back(f * g);
        CHECK(ideal_contains(meet, Ideal(R, prod)));
    }

    // elimination also works when the base order is lex
    PolyRing L = QQ({"x", "y"}, MonomialOrder::lex);
    Ideal a({L}, {parse_poly("x", L)});
    Ideal b({L}, {parse_poly("y", L)});
    CHECK(ideal_equal(ideal_intersect(a, b), Ideal(L, {parse_poly("x*y", L)})));
}

TEST_CASE("saturate examples and route agreement") {
    PolyRing R = QQ({"x", "y"});
    Polynomial x = R.var(0);
    CHECK(ideal_equal(saturate(ideal(R, {"x^2*y"}), x), ideal(R, {"y"})));
    CHECK(ideal_equal(saturate(ideal(R, {"x^2"}), R.one()), ideal(R, {"x^2"})));
    // ((xy, y^2) : y^inf) = (1): y^2 already certifies 1 after two quotients
    CHECK(saturate(ideal(R, {"x*y", "y^2"}), R.var(1)).is_unit());

    // monomial oracle across a small corpus
    std::vector<std::vector<std::string>> corpus = {
        {"x^2*y", "x*y^2"}, {"x^3", "x*y"}, {"x^2", "y"}};
    for (const auto& gens : corpus) {
        Ideal I = ideal(R, gens);
        CHECK(ideal_equal(saturate(I, x), monomial_saturate_oracle(I, 0)));
    }
}

TEST_CASE("radical membership") {
    PolyRing R = QQ({"x", "y"});
    CHECK(radical_membership(parse_poly("x", R), ideal(R, {"x^2"})));
    CHECK_FALSE(radical_membership(parse_poly("y", R), ideal(R, {"x^2"})));
    CHECK(radical_membership(parse_poly("x + y", R), ideal(R, {"(x + y)^3", "x - x"})));
}

TEST_CASE("krull dimension") {
    PolyRing R = QQ({"x", "y"});
    CHECK(krull_dim(ideal(R, {})) == 2);
    CHECK(krull_dim(ideal(R, {"x", "y"})) == 0);
    CHECK(krull_dim(ideal(R, {"x*y"})) == 1);
    CHECK_THROWS_AS(krull_dim(ideal(R, {"1"})), std::domain_error);

    // Stanley-Reisner oracle for squarefree monomial ideals
    PolyRing R3 = QQ({"x", "y", "z"});
    std::vector<std::vector<std::string>> corpus = {
        {"x*y"}, {"x*y", "y*z"}, {"x*y*z"}, {"x", "y*z"}, {"x*y", "x*z", "y*z"}};
    for (const auto& gens : corpus) {
        Ideal I = ideal(R3, gens);
        std::vector<Monomial> ms;
        for (const auto& g : I.gens()) ms.push_back(g.leading().m);
        CHECK(krull_dim(I) == stanley_reisner_dim_oracle(R3, ms));
    }
}

TEST_CASE("groebner over a prime field") {
    PolyRing R({"x", "y"}, CoefficientField::prime(5));
    Ideal I = ideal(R, {"x^2 + 4*y", "x*y"});
    const auto& gb = I.groebner_basis();
    for (const auto& g : I.gens()) CHECK(normal_form(g, gb).is_zero());
    CHECK(ideal_contains(I, ideal(R, {"y^2"})));  // y^2 = y(x^2+4y) - x(xy) + ... sanity
}
