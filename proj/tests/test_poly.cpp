#include <doctest.h>

#include "testutil.hpp"
#include "whtk/ratfun.hpp"

using namespace whtk;
using namespace whtk::testutil;

TEST_CASE("gaussian rational field ops") {
    GR one_plus_i(1, 1), one_minus_i(1, -1);
    CHECK(one_plus_i * one_minus_i == GR(2));
    CHECK(GR::i().norm() == 1);
    CHECK(GR(make_rational(3, 2), make_rational(1, 2)).conj() ==
          GR(make_rational(3, 2), make_rational(-1, 2)));
    CHECK(GR(1) / one_plus_i == GR(make_rational(1, 2), make_rational(-1, 2)));
    CHECK_THROWS_AS(GR(1) / GR(0), DivisionByZero);
}

TEST_CASE("divrem examples") {
    auto [q1, r1] = poly_divrem(P({-1, 0, 1}), P({-1, 1}));
    CHECK(q1 == P({1, 1}));
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divrem(P({0, 1}), P({-1, 1}));
    CHECK(q2 == P({1}));
    CHECK(r2 == P({1}));

    Polynomial a = P({0, -1, 1, 1}), b = P({0, 0, 1});
    auto [q3, r3] = poly_divrem(a, b);
    CHECK(q3 == P({1, 1}));
    CHECK(r3 == P({0, -1}));
    CHECK(q3 * b + r3 == a);

    CHECK_THROWS_AS(poly_divrem(a, Polynomial::zero()), DivisionByZero);
}

TEST_CASE("divrem round trip property") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        Polynomial a = rng.located_product(5);
        Polynomial b = rng.located_product(4, false);
        auto [q, r] = poly_divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd examples and properties") {
    CHECK(poly_gcd(P({-1, 0, 1}), P({1, -2, 1})) == P({-1, 1}));
    CHECK(poly_gcd(Polynomial::monomial(5), Polynomial::monomial(2)) == Polynomial::monomial(2));
    Polynomial z_minus_i{-GR::i(), GR(1)};
    CHECK(poly_gcd(P({1, 0, 1}), z_minus_i) == z_minus_i);

    Rng rng(12);
    for (int it = 0; it < 100; ++it) {
        Polynomial a = rng.located_product(3), b = rng.located_product(3), g = rng.located_product(2);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(poly_gcd(a, b) == poly_gcd(b, a));
        Polynomial d = poly_gcd(a, b);
        CHECK(poly_divrem(a, d).rem.is_zero());
        CHECK(poly_divrem(b, d).rem.is_zero());
        CHECK(poly_gcd(a * g, b * g) == (g.monic() * d));
    }
}

TEST_CASE("squarefree decomposition") {
    Polynomial p = P({-1, 1}).pow(2) * Polynomial::monomial(4);
    auto sf = poly_squarefree(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].factor == P({-1, 1}));
    CHECK(sf[0].multiplicity == 2);
    CHECK(sf[1].factor == P({0, 1}));
    CHECK(sf[1].multiplicity == 4);

    auto sf2 = poly_squarefree(P({-1, 0, 1}));
    REQUIRE(sf2.size() == 1);
    CHECK(sf2[0].factor == P({-1, 0, 1}));
    CHECK(sf2[0].multiplicity == 1);

    Polynomial p3 = P({1, 0, 1}).pow(3) * P({-2, 1});
    auto sf3 = poly_squarefree(p3);
    REQUIRE(sf3.size() == 2);
    CHECK(sf3[0].factor == P({-2, 1}));
    CHECK(sf3[0].multiplicity == 1);
    CHECK(sf3[1].factor == P({1, 0, 1}));
    CHECK(sf3[1].multiplicity == 3);
    // cross-check with gcd(p, p')
    CHECK(poly_gcd(p3, p3.derivative()) == P({1, 0, 1}).pow(2));

    Rng rng(13);
    for (int it = 0; it < 100; ++it) {
        Polynomial q = rng.located_product(5, false);
        Polynomial rebuilt = Polynomial::constant(q.lead());
        for (const auto& [f, m] : poly_squarefree(q)) rebuilt *= f.pow(m);
        CHECK(rebuilt == q);
    }
}

TEST_CASE("reverse") {
    CHECK(poly_reverse(P({1, -2, 1}), 2) == P({1, -2, 1}));
    CHECK(poly_reverse(P({1}), 3) == Polynomial::monomial(3));
    CHECK(poly_reverse(P({0, 2, 1}), 2) == P({1, 2}));
    CHECK_THROWS_AS(poly_reverse(P({1, 0, 1}), 1), ReverseDegreeTooSmall);

    Rng rng(14);
    for (int it = 0; it < 100; ++it) {
        Polynomial p = rng.located_product(4);
        if (p.is_zero() || !p.at_zero().is_zero()) {
            if (p.is_zero()) continue;
            int n = p.degree();
            CHECK(poly_reverse(poly_reverse(p, n), n) == p);
        }
    }
}

TEST_CASE("rational function normalization") {
    RationalFunction f(P({-1, 0, 1}), P({-1, 1}));
    CHECK(f.num() == P({1, 1}));
    CHECK(f.den() == Polynomial::one());

    RationalFunction g(P({0, 2}), P({-2, 2}));
    CHECK(g.num() == P({0, 1}));
    CHECK(g.den() == P({-1, 1}));

    RationalFunction h(Polynomial::zero(), P({-1, 1}));
    CHECK(h.is_zero());
    CHECK(h.den() == Polynomial::one());

    CHECK_THROWS_AS(RationalFunction(P({1}), Polynomial::zero()), DivisionByZero);

    Rng rng(15);
    for (int it = 0; it < 100; ++it) {
        Polynomial n = rng.located_product(3), d = rng.located_product(3, false);
        RationalFunction once(n, d);
        RationalFunction twice(once.num(), once.den());
        CHECK(once == twice);
        // cross-multiplied identity against the unnormalized input
        CHECK(once.num() * d == n * once.den());
    }
}

TEST_CASE("substitution of 1/z") {
    RationalFunction f(P({-1, 1}), Polynomial::one());  // z - 1
    RationalFunction fi = f.subst_inv();
    CHECK(fi == RationalFunction(P({1, -1}), P({0, 1})));  // (1 - z)/z
    RationalFunction g(Polynomial::one(), P({-1, 1}));
    CHECK(g.subst_inv() == RationalFunction(P({0, 1}), P({1, -1})));
}
