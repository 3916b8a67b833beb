// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Uses only the public library interface.
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "testutil.hpp"
#include "whtk/fredholm.hpp"

using namespace whtk;
using namespace whtk::testutil;

namespace {

int failures = 0;
int checks_failed = 0;

void expect(bool ok, const char* what) {
    if (!ok) {
        ++checks_failed;
        std::printf("    check failed: %s\n", what);
    }
}
#define EXPECT(cond) expect((cond), #cond)

double run(int n, const char* name, const std::function<void()>& body) {
    checks_failed = 0;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        ++checks_failed;
        std::printf("    unexpected exception: %s\n", e.what());
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = checks_failed == 0;
    if (!ok) ++failures;
    std::printf("criterion %d [%s]: %s (%.2f s)\n", n, name, ok ? "pass" : "FAIL", sec);
    return sec;
}

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

// Omega = [[1, 1/(z-1)],[0, 1]], the golden running example.
RatMatFun golden_omega() {
    return ratmat_from_entries({{rf({1}), rf({1}, {-1, 1})}, {rf({0}), rf({1})}});
}

// Xi = [[1/(z-1)^3, 0],[z^2/(z-1)^4, z^5/(z-1)^4]].
RatMatFun xi_example() {
    Polynomial c3 = P({-1, 1}).pow(3), c4 = P({-1, 1}).pow(4);
    return ratmat_from_entries({{RationalFunction(P({1}), c3), rf({0})},
                                {RationalFunction(Polynomial::monomial(2), c4),
                                 RationalFunction(Polynomial::monomial(5), c4)}});
}

int root_multiplicity(Polynomial p, const GR& root) {
    int k = 0;
    while (!p.is_zero() && p.eval(root).is_zero()) {
        p = poly_div_exact(p, Polynomial{-root, GR(1)});
        ++k;
    }
    return k;
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    auto [fact, tr] = wh_factorize(golden_omega());
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT(sec < 1.0);

    EXPECT(fact.k == 2);
    RatMat om_minus(2);
    om_minus.at(0, 0) = rf({-1, -1}, {0, 1});  // -1/z - 1
    om_minus.at(0, 1) = rf({-1}, {0, 0, 1});   // -1/z^2
    om_minus.at(1, 0) = rf({1});
    om_minus.at(1, 1) = rf({1, -1}, {0, 1});   // 1/z - 1
    EXPECT(fact.Omega_minus == om_minus);
    EXPECT(fact.Omega_circ == (std::vector<RationalFunction>{rf({-1, 1}), rf({1}, {-1, 1})}));
    EXPECT(fact.P0 == mat2(P({1}), P({0}), P({0, -1, 1, 1}), Polynomial::monomial(4)));
    RatMat om_plus(2);
    om_plus.at(0, 0) = rf({0, -1});
    om_plus.at(0, 1) = rf({-1});
    om_plus.at(1, 0) = rf({1});
    EXPECT(fact.Omega_plus == om_plus);
}

void criterion2() {
    auto [fact, tr] = wh_factorize(golden_omega());

    // Smith diagonals of the two intermediate matrix polynomials.
    auto d1 = smith_decompose(tr.P1).D;
    EXPECT(d1 == (std::vector<Polynomial>{P({-1, 1}).pow(2), Polynomial::one()}));
    auto d2 = smith_decompose(tr.P2).D;
    EXPECT(d2 == (std::vector<Polynomial>{(Polynomial::monomial(2) * P({-1, 1}).pow(2)).monic(),
                                          Polynomial::one()}));
    EXPECT(matpoly_det(tr.P3) == Polynomial::monomial(4));

    // The triangular split of P3 reproduces every intermediate Q step.
    const std::vector<MatPoly>& qs = tr.split3.q_steps;
    EXPECT(qs.size() == 4);
    if (qs.size() == 4) {
        EXPECT(qs[0] == MatPoly::diagonal({Polynomial::one(), Polynomial::z()}));
        EXPECT(qs[1] == mat2(P({1}), P({}), P({0, -1}), Polynomial::monomial(2)));
        EXPECT(qs[2] == mat2(P({1}), P({}), P({0, -1, 1}), Polynomial::monomial(3)));
        EXPECT(qs[3] == mat2(P({1}), P({}), P({0, -1, 1, 1}), Polynomial::monomial(4)));
    }
}

void criterion3() {
    FredholmReport rep = fredholm_of(xi_example());
    EXPECT(rep.is_fredholm);
    EXPECT(rep.index && *rep.index == 2);

    // A second, structurally different factorization of the same function
    // (exponents (3,2) instead of (0,5)) gives the same index.
    WHFactorization alt;
    alt.k = 0;
    alt.Omega_minus = RatMat::identity(2);
    alt.Omega_minus.at(0, 0) = rf({-1});
    alt.Omega_minus.at(0, 1) = rf({-1, 1}, {0, 0, 1});
    alt.Omega_circ = {RationalFunction(P({1}), P({-1, 1}).pow(3)),
                      RationalFunction(P({1}), P({-1, 1}).pow(4))};
    alt.P0 = mat2(Polynomial::monomial(3), P({0}), P({0}), Polynomial::monomial(2));
    alt.Omega_plus = RatMat(2);
    alt.Omega_plus.at(0, 1) = rf({1});
    alt.Omega_plus.at(1, 0) = rf({1});
    alt.Omega_plus.at(1, 1) = rf({0, 0, 0, 1});
    EXPECT(verify_wh(xi_example(), alt).ok());
    FredholmReport rep2 = fredholm_report(alt);
    EXPECT(rep2.is_fredholm);
    EXPECT(rep2.index && *rep2.index == 2);
    EXPECT(rep2.n_exponents == (std::vector<int>{3, 2}));
}

void criterion4() {
    FredholmReport a = fredholm_of(golden_omega());
    EXPECT(!a.is_fredholm);
    EXPECT(a.witnesses == (std::vector<Polynomial>{P({-1, 1})}));

    // diag((z+1)/(z-1), (z-1)/(z+1)): det == 1 everywhere, still not Fredholm.
    RatMatFun d = ratmat_from_entries(
        {{rf({1, 1}, {-1, 1}), rf({0})}, {rf({0}), rf({-1, 1}, {1, 1})}});
    FredholmReport b = fredholm_of(d);
    EXPECT(!b.is_fredholm);
    EXPECT(!b.witnesses.empty());
}

void criterion5() {
    RatMatFun xi = xi_example();
    Diag2x2 d = diagonalize_2x2(xi);
    EXPECT(d.middle == (std::vector<RationalFunction>{
                           RationalFunction(Polynomial::monomial(3), P({-1, 1}).pow(3)),
                           RationalFunction(Polynomial::monomial(2), P({-1, 1}).pow(4))}));
    EXPECT(d.outer_minus * xi.omega() * d.outer_plus == RatMat::diagonal(d.middle));
    EXPECT(is_minus_unit(ratmat_inverse(d.outer_minus)));
    EXPECT(is_plus_unit(ratmat_inverse(d.outer_plus)));

    // Degree condition violated: the (1,0) entry forces an impossible split.
    RatMatFun bad = ratmat_from_entries(
        {{rf({1}, {-1, 1}), rf({0})},
         {RationalFunction(P({1}), P({-1, 1}).pow(2)),
          RationalFunction(Polynomial::monomial(2), P({-1, 1}).pow(2))}});
    bool threw = false;
    try {
        diagonalize_2x2(bad);
    } catch (const ConditionFailed&) {
        threw = true;
    }
    EXPECT(threw);
}

void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    int cases = 0;
    Rng rng(6001);

    // Family A: full pipeline + verification (includes the regional-Smith
    // consistency check on the circle diagonal).
    for (int it = 0; it < 60; ++it) {
        int m = rng.uniform(2, 3);
        std::vector<RationalFunction> diag(m);
        for (int j = 0; j < m; ++j)
            diag[j] = RationalFunction(rng.located_product(2, false),
                                       rng.located_product(2, true).monic());
        RatMat om_mat =
            RatMat(rng.unimodular(m, 3, 1)) * RatMat::diagonal(diag) * RatMat(rng.unimodular(m, 3, 1));
        std::vector<std::vector<RationalFunction>> entries(m, std::vector<RationalFunction>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) entries[i][j] = om_mat.at(i, j);
        RatMatFun om = ratmat_from_entries(entries);
        auto [fact, tr] = wh_factorize(om);
        EXPECT(verify_wh(om, fact).ok());
        ++cases;
    }

    // Family B: Smith decomposition with bit-exact unimodular invariance.
    for (int it = 0; it < 60; ++it) {
        int m = rng.uniform(2, 3);
        MatPoly A = rng.located_matrix(m);
        SmithDecomposition S = smith_decompose(A);
        EXPECT(verify_smith(A, S).ok());
        MatPoly B = rng.unimodular(m) * A * rng.unimodular(m);
        EXPECT(smith_invariants_via_minors(B) == S.D);
        ++cases;
    }

    // Family C: triangular split recovers planted z-power exponents.
    for (int it = 0; it < 50; ++it) {
        int m = rng.uniform(2, 3);
        std::vector<int> n0(m);
        MatPoly Q0(m);
        for (int i = 0; i < m; ++i) {
            n0[i] = rng.uniform(0, 3);
            Q0.at(i, i) = Polynomial::monomial(n0[i]);
            for (int j = 0; j < i; ++j) {
                if (n0[i] == 0) continue;
                std::vector<GR> c(static_cast<std::size_t>(n0[i]));
                for (auto& x : c) x = GR(rng.uniform(-2, 2));
                Q0.at(i, j) = Polynomial(std::move(c));
            }
        }
        std::vector<Polynomial> rdiag(m);
        for (int j = 0; j < m; ++j) {
            rdiag[j] = Polynomial::one();
            for (int s = rng.uniform(0, 2); s > 0; --s) {
                GR root = rng.pool_root();
                if (root.is_zero()) root = GR(make_rational(1, 2));
                rdiag[j] *= linear(root);
            }
        }
        MatPoly R0 = rng.unimodular(m) * MatPoly::diagonal(rdiag) * rng.unimodular(m);
        TriangularSplit S = qr_split_at_zero(Q0 * R0);
        EXPECT(S.n_exponents == n0);
        EXPECT(S.Q == Q0);
        EXPECT(S.R == R0);
        ++cases;
    }

    // Family D: the reversed matrix has reciprocal invariant-factor roots.
    const std::vector<GR> probes = {GR(1), GR(-1), GR(make_rational(1, 2)), GR(2), GR::i()};
    for (int it = 0; it < 50; ++it) {
        int m = rng.uniform(2, 3);
        MatPoly A = rng.located_matrix(m);
        MatPoly R = A.reverse(A.degree());
        if (matpoly_det(R).is_zero()) continue;
        auto dA = smith_invariants_via_minors(A);
        auto dR = smith_invariants_via_minors(R);
        for (const GR& alpha : probes) {
            int totalA = 0, totalR = 0;
            for (int j = 0; j < m; ++j) {
                totalA += root_multiplicity(dA[j], alpha);
                totalR += root_multiplicity(dR[j], GR(1) / alpha);
            }
            EXPECT(totalA == totalR);
        }
        ++cases;
    }

    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT(cases >= 200);
    EXPECT(sec < 60.0);
    std::printf("    %d randomized cases in %.1f s\n", cases, sec);
}

void criterion7() {
    bool threw = false;
    try {
        split_by_circle(P({-1, -1, 1}));  // roots (1±sqrt 5)/2 straddle the circle
    } catch (const MixedLocationFactor&) {
        threw = true;
    }
    EXPECT(threw);
}

void criterion8() {
    Rng rng(8001);
    const GR inside[3] = {GR(make_rational(1, 2)), GR(make_rational(-1, 2)), GR(0)};
    const GR outside[2] = {GR(2), GR(-2)};
    int done = 0;
    while (done < 50) {
        int m = rng.uniform(2, 3);
        std::vector<RationalFunction> diag(m);
        for (int j = 0; j < m; ++j)
            diag[j] = RationalFunction(rng.located_product(1, false),
                                       rng.located_product(1, true).monic());
        RatMat om_mat = RatMat(rng.unimodular(m, 2, 1)) * RatMat::diagonal(diag);
        std::vector<std::vector<RationalFunction>> entries(m, std::vector<RationalFunction>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) entries[i][j] = om_mat.at(i, j);
        FredholmReport base = fredholm_of(ratmat_from_entries(entries));

        RatMat U = RatMat::identity(m);
        for (int s = 0, ops = rng.uniform(1, 2); s < ops; ++s) {
            int i = rng.uniform(0, m - 1), j = rng.uniform(0, m - 1);
            if (i == j) continue;
            RatMat E = RatMat::identity(m);
            E.at(i, j) = RationalFunction(Polynomial::constant(GR(rng.uniform(-2, 2))),
                                          linear(inside[rng.uniform(0, 2)]));
            U = U * E;
        }
        RatMat V = RatMat(rng.unimodular(m, 2, 1));
        for (int s = 0, ops = rng.uniform(0, 1); s < ops; ++s) {
            int i = rng.uniform(0, m - 1), j = rng.uniform(0, m - 1);
            if (i == j) continue;
            RatMat E = RatMat::identity(m);
            E.at(i, j) = RationalFunction(Polynomial::constant(GR(rng.uniform(-2, 2))),
                                          linear(outside[rng.uniform(0, 1)]));
            V = V * E;
        }

        RatMat prod = U * om_mat * V;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) entries[i][j] = prod.at(i, j);
        FredholmReport conj = fredholm_of(ratmat_from_entries(entries));

        EXPECT(base.is_fredholm == conj.is_fredholm);
        if (base.is_fredholm && conj.is_fredholm) EXPECT(*base.index == *conj.index);
        ++done;
    }
    EXPECT(done == 50);
}

}  // namespace

int main() {
    run(1, "golden end-to-end factorization", criterion1);
    run(2, "golden trace checkpoints", criterion2);
    run(3, "index on the triangular example, both factorizations", criterion3);
    run(4, "non-Fredholm despite circle-free determinant", criterion4);
    run(5, "2x2 Bezout diagonalization and its failure mode", criterion5);
    run(6, "randomized property suite", criterion6);
    run(7, "mixed-location factor rejection", criterion7);
    run(8, "index invariance under unit multiplication", criterion8);
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
