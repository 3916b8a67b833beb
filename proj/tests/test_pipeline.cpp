#include <doctest.h>

#include "testutil.hpp"
#include "whtk/wh_pipeline.hpp"

using namespace whtk;
using namespace whtk::testutil;

namespace {

RationalFunction rf(std::vector<long> num, std::vector<long> den = {1}) {
    return RationalFunction(P(std::move(num)), P(std::move(den)));
}

MatPoly mat2(Polynomial a, Polynomial b, Polynomial c, Polynomial d) {
    MatPoly M(2);
    M.at(0, 0) = std::move(a);
    M.at(0, 1) = std::move(b);
    M.at(1, 0) = std::move(c);
    M.at(1, 1) = std::move(d);
    return M;
}

// The running example: Omega = [[1, 1/(z-1)],[0, 1]].
RatMatFun section5_omega() {
    return ratmat_from_entries({{rf({1}), rf({1}, {-1, 1})}, {rf({0}), rf({1})}});
}

// Xi = [[1/(z-1)^3, 0],[z^2/(z-1)^4, z^5/(z-1)^4]].
RatMatFun xi_example() {
    Polynomial c3 = P({-1, 1}).pow(3), c4 = P({-1, 1}).pow(4);
    return ratmat_from_entries({{RationalFunction(P({1}), c3), rf({0})},
                                {RationalFunction(Polynomial::monomial(2), c4),
                                 RationalFunction(Polynomial::monomial(5), c4)}});
}

}  // namespace

TEST_CASE("ratmat_from_entries canonicalizes the common denominator") {
    RatMatFun om = section5_omega();
    CHECK(om.q == P({-1, 1}));
    CHECK(om.P1 == mat2(P({-1, 1}), P({1}), P({0}), P({-1, 1})));

    RatMatFun id = ratmat_from_entries({{rf({1}), rf({0})}, {rf({0}), rf({1})}});
    CHECK(id.q == Polynomial::one());
    CHECK(id.P1 == MatPoly::identity(2));

    // diag((z+1)/(z-1), (z-1)/(z+1)): q is the lcm of both denominators.
    RatMatFun d = ratmat_from_entries({{rf({1, 1}, {-1, 1}), rf({0})}, {rf({0}), rf({-1, 1}, {1, 1})}});
    CHECK(d.q == P({-1, 0, 1}));
    CHECK(d.P1 == mat2(P({1, 1}).pow(2), P({0}), P({0}), P({-1, 1}).pow(2)));

    // 1x1 with cancellation: (z^2-1)/(z-1) is the polynomial z+1.
    RatMatFun s = ratmat_from_entries({{rf({-1, 0, 1}, {-1, 1})}});
    CHECK(s.q == Polynomial::one());
    CHECK(s.P1.at(0, 0) == P({1, 1}));

    CHECK_THROWS_AS(ratmat_from_entries({{rf({1}), rf({1})}, {rf({1}), rf({1})}}), ZeroDeterminant);
}

TEST_CASE("rational matrix inverse is exact") {
    Rng rng(411);
    for (int it = 0; it < 12; ++it) {
        int m = rng.uniform(1, 3);
        RatMat A(RatMat(rng.located_matrix(m)));
        if (ratmat_det(A).is_zero()) continue;
        CHECK(A * ratmat_inverse(A) == RatMat::identity(m));
        CHECK(ratmat_inverse(A) * A == RatMat::identity(m));
    }
    CHECK_THROWS_AS(ratmat_inverse(RatMat(2)), SingularMatrix);
}

TEST_CASE("golden end-to-end factorization") {
    RatMatFun om = section5_omega();
    auto [fact, tr] = wh_factorize(om);

    CHECK(fact.k == 2);

    RatMat om_minus(2);
    om_minus.at(0, 0) = rf({-1, -1}, {0, 1});  // -1/z - 1
    om_minus.at(0, 1) = rf({-1}, {0, 0, 1});   // -1/z^2
    om_minus.at(1, 0) = rf({1});
    om_minus.at(1, 1) = rf({1, -1}, {0, 1});   // 1/z - 1
    CHECK(fact.Omega_minus == om_minus);

    CHECK(fact.Omega_circ == std::vector<RationalFunction>{rf({-1, 1}), rf({1}, {-1, 1})});
    CHECK(fact.P0 == mat2(P({1}), P({0}), P({0, -1, 1, 1}), Polynomial::monomial(4)));

    RatMat om_plus(2);
    om_plus.at(0, 0) = rf({0, -1});
    om_plus.at(0, 1) = rf({-1});
    om_plus.at(1, 0) = rf({1});
    CHECK(fact.Omega_plus == om_plus);

    CHECK(fact.product() == om.omega());
    WHVerification v = verify_wh(om, fact);
    CHECK(v.ok());

    // Circle-diagonal invariant: q_circ * Omega_circ = diag((z-1)^2, 1).
    CHECK(regional_smith(om.P1, Region::OnCircle).D ==
          std::vector<Polynomial>{P({-1, 1}).pow(2), Polynomial::one()});
}

TEST_CASE("golden trace checkpoints") {
    RatMatFun om = section5_omega();
    auto [fact, tr] = wh_factorize(om);

    CHECK(tr.q == P({-1, 1}));
    CHECK(tr.split_q.kappa == 0);

    // Step 2: Smith of P1 = qOmega.
    CHECK(tr.E1 == mat2(P({0}), P({1}), P({-1}), P({-1, 1})));
    CHECK(tr.D1_minus == std::vector<Polynomial>{Polynomial::one(), Polynomial::one()});
    CHECK(tr.D1_circ == std::vector<Polynomial>{P({-1, 1}).pow(2), Polynomial::one()});
    CHECK(tr.D1_plus == std::vector<Polynomial>{Polynomial::one(), Polynomial::one()});
    CHECK(tr.F1 == mat2(P({1}), P({0}), P({-1, 1}), P({1})));

    // Step 3: N, P2 and its Smith data.
    CHECK(tr.N == 2);
    CHECK(tr.P2 == mat2(P({0}), P({0, 0, 1}), -P({-1, 1}).pow(2), P({0, 1, -1})));
    CHECK(tr.E2 == mat2(P({-1, -1}), P({0, 0, -1}), P({1}), P({-1, 1})));
    CHECK(tr.D2_minus == std::vector<Polynomial>{Polynomial::monomial(2), Polynomial::one()});
    CHECK(tr.D2_circ == std::vector<Polynomial>{P({-1, 1}).pow(2), Polynomial::one()});
    CHECK(tr.D2_plus == std::vector<Polynomial>{Polynomial::one(), Polynomial::one()});
    CHECK(tr.F2 == mat2(P({-1}), P({-1}), P({1, -1, -1, 1}), P({0, -1, -1, 1})));
    CHECK(tr.rho == std::vector<int>{2, 0});
    CHECK(tr.eta == std::vector<int>{2, 0});
    CHECK(tr.D2_circ_tilde == std::vector<Polynomial>{P({-1, 1}).pow(2), Polynomial::one()});

    // Step 4: K, P3 and its triangular split.
    CHECK(tr.K == 4);
    CHECK(tr.P3 == mat2(P({-1}), P({-1}), P({0, 1, -1, -1, 1}), P({0, 1, -1, -1})));
    CHECK(matpoly_det(tr.P3) == Polynomial::monomial(4));
    CHECK(tr.split3.Q == mat2(P({1}), P({0}), P({0, -1, 1, 1}), Polynomial::monomial(4)));
    CHECK(tr.split3.R == mat2(P({-1}), P({-1}), P({1}), P({0})));
}

TEST_CASE("trivial factorizations") {
    RatMatFun id = ratmat_from_entries({{rf({1}), rf({0})}, {rf({0}), rf({1})}});
    auto [fi, ti] = wh_factorize(id);
    CHECK(fi.k == 0);
    CHECK(fi.Omega_minus.is_identity());
    CHECK(fi.Omega_circ == std::vector<RationalFunction>{rf({1}), rf({1})});
    CHECK(fi.P0 == MatPoly::identity(2));
    CHECK(fi.Omega_plus.is_identity());

    RatMatFun s = ratmat_from_entries({{rf({1}, {-1, 1})}});
    auto [fs, ts] = wh_factorize(s);
    CHECK(fs.k == 0);
    CHECK(fs.Omega_minus.is_identity());
    CHECK(fs.Omega_circ == std::vector<RationalFunction>{rf({1}, {-1, 1})});
    CHECK(fs.P0 == MatPoly::identity(1));
    CHECK(fs.Omega_plus.is_identity());
    CHECK(verify_wh(s, fs).ok());
}

TEST_CASE("minus/plus unit classification") {
    RatMatFun om = section5_omega();
    auto [fact, tr] = wh_factorize(om);
    CHECK(is_minus_unit(fact.Omega_minus));
    CHECK_FALSE(is_plus_unit(fact.Omega_minus));
    CHECK(is_plus_unit(fact.Omega_plus));
    CHECK_FALSE(is_minus_unit(fact.Omega_plus));

    // diag(z-1, 1): polynomial, but unbounded at infinity (not minus) and
    // with an inverse pole at 1 on T (not plus).
    RatMat R(2);
    R.at(0, 0) = rf({-1, 1});
    R.at(1, 1) = rf({1});
    CHECK_FALSE(is_minus_unit(R));
    CHECK_FALSE(is_plus_unit(R));
}

TEST_CASE("verify_wh rejects a tampered factorization") {
    RatMatFun om = section5_omega();
    auto [fact, tr] = wh_factorize(om);
    WHFactorization bad = fact;
    bad.k -= 1;
    WHVerification v = verify_wh(om, bad);
    CHECK_FALSE(v.product_equal);
    CHECK_FALSE(v.ok());
}

TEST_CASE("verify_wh accepts a hand-built alternative factorization") {
    // The second factorization of Xi: different P0 exponents (3,2) versus the
    // pipeline's, same circle data.
    RatMatFun xi = xi_example();

    WHFactorization alt;
    alt.k = 0;
    alt.Omega_minus = RatMat::identity(2);
    alt.Omega_minus.at(0, 0) = rf({-1});
    alt.Omega_minus.at(0, 1) = rf({-1, 1}, {0, 0, 1});  // (z-1)/z^2
    alt.Omega_circ = {RationalFunction(P({1}), P({-1, 1}).pow(3)),
                      RationalFunction(P({1}), P({-1, 1}).pow(4))};
    alt.P0 = mat2(Polynomial::monomial(3), P({0}), P({0}), Polynomial::monomial(2));
    alt.Omega_plus = RatMat(2);
    alt.Omega_plus.at(0, 1) = rf({1});
    alt.Omega_plus.at(1, 0) = rf({1});
    alt.Omega_plus.at(1, 1) = rf({0, 0, 0, 1});

    CHECK(verify_wh(xi, alt).ok());

    auto [fact, tr] = wh_factorize(xi);
    CHECK(verify_wh(xi, fact).ok());
    // The circle factor agrees across factorizations.
    CHECK(fact.Omega_circ == alt.Omega_circ);
}

TEST_CASE("2x2 Bezout diagonalization of the Xi example") {
    RatMatFun xi = xi_example();
    Diag2x2 d = diagonalize_2x2(xi);

    CHECK(d.middle == std::vector<RationalFunction>{
                          RationalFunction(Polynomial::monomial(3), P({-1, 1}).pow(3)),
                          RationalFunction(Polynomial::monomial(2), P({-1, 1}).pow(4))});
    CHECK(is_minus_unit(ratmat_inverse(d.outer_minus)));
    CHECK(is_plus_unit(ratmat_inverse(d.outer_plus)));
    CHECK(d.outer_minus * xi.omega() * d.outer_plus == RatMat::diagonal(d.middle));
}

TEST_CASE("2x2 diagonalization corner cases") {
    // Already diagonal: nothing to do, identity outer factors.
    RatMatFun diag = ratmat_from_entries(
        {{rf({1}, {-1, 1}), rf({0})}, {rf({0}), RationalFunction(Polynomial::monomial(2), P({-1, 1}).pow(2))}});
    Diag2x2 d = diagonalize_2x2(diag);
    CHECK(d.outer_minus.is_identity());
    CHECK(d.outer_plus.is_identity());
    CHECK(d.middle == std::vector<RationalFunction>{diag.omega().at(0, 0), diag.omega().at(1, 1)});

    // k1 + deg q0 + deg p1 > k12: d = 1 makes k12 = 0 while q0 = z-1.
    RatMatFun bad = ratmat_from_entries(
        {{rf({1}, {-1, 1}), rf({0})},
         {RationalFunction(P({1}), P({-1, 1}).pow(2)),
          RationalFunction(Polynomial::monomial(2), P({-1, 1}).pow(2))}});
    CHECK_THROWS_AS(diagonalize_2x2(bad), ConditionFailed);

    // Shape violations.
    CHECK_THROWS_AS(diagonalize_2x2(section5_omega()), ShapeMismatch);
    CHECK_THROWS_AS(diagonalize_2x2(ratmat_from_entries({{rf({1})}})), ShapeMismatch);
}

TEST_CASE("randomized pipeline property suite") {
    Rng rng(2024);
    int done = 0;
    for (unsigned it = 0; done < 40; ++it) {
        REQUIRE(it < 400);
        int m = rng.uniform(2, 3);

        // Omega = U * diag(located rationals) * V with U, V unimodular.
        std::vector<RationalFunction> diag(m);
        for (int j = 0; j < m; ++j)
            diag[j] = RationalFunction(rng.located_product(2, false), rng.located_product(2, true).monic());
        RatMat om_mat = RatMat(rng.unimodular(m)) * RatMat::diagonal(diag) * RatMat(rng.unimodular(m));
        std::vector<std::vector<RationalFunction>> entries(m, std::vector<RationalFunction>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) entries[i][j] = om_mat.at(i, j);

        RatMatFun om = ratmat_from_entries(entries);
        auto [fact, tr] = wh_factorize(om);

        CHECK(fact.product() == om.omega());
        CHECK(verify_wh(om, fact).ok());

        // Step-3 identity P1(z) = z^N P2(1/z) D1+(z) F1(z).
        RatMat lhs(tr.P1);
        RatMat rhs = RatMat(tr.P2).subst_inv() * RatMat(MatPoly::diagonal(tr.D1_plus)) * RatMat(tr.F1) *
                     RationalFunction(Polynomial::monomial(tr.N));
        CHECK(lhs == rhs);
        ++done;
    }
}
