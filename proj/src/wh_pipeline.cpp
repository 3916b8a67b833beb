#include "whtk/wh_pipeline.hpp"

#include <algorithm>

#include "whtk/error.hpp"

namespace whtk {
namespace {

RationalFunction zpow(int e) {
    if (e >= 0) return RationalFunction(Polynomial::monomial(e));
    return RationalFunction(Polynomial::one(), Polynomial::monomial(-e));
}

RatMat diag_rat(const std::vector<RationalFunction>& d) { return RatMat::diagonal(d); }

std::vector<RationalFunction> to_rat(const std::vector<Polynomial>& d) {
    std::vector<RationalFunction> out;
    out.reserve(d.size());
    for (const Polynomial& p : d) out.emplace_back(p);
    return out;
}

// Splits the classical Smith diagonal of P into its inside/circle/outside
// parts (entries monic, so no constants appear).
struct ThreeWaySmith {
    MatPoly E, F;
    std::vector<Polynomial> d_minus, d_circ, d_plus;
};

ThreeWaySmith smith_three_way(const MatPoly& P) {
    SmithDecomposition S = smith_decompose(P);
    ThreeWaySmith out;
    out.E = S.E;
    out.F = S.F;
    for (const Polynomial& d : S.D) {
        CircleSplit s = split_by_circle(d);
        if (s.constant != GR(1))
            throw InvalidFactorization("Smith diagonal entry not monic after circle split");
        out.d_minus.push_back(s.inside);
        out.d_circ.push_back(s.circle);
        out.d_plus.push_back(s.outside);
    }
    return out;
}

std::vector<Polynomial> diag_product(const std::vector<Polynomial>& a,
                                     const std::vector<Polynomial>& b) {
    std::vector<Polynomial> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] * b[j];
    return out;
}

void assert_step(bool ok, const char* what) {
    if (!ok) throw InvalidFactorization(what);
}

// All poles of every entry inside the open disk.
bool poles_only_inside(const RatMat& R) {
    for (int i = 0; i < R.size(); ++i)
        for (int j = 0; j < R.size(); ++j) {
            CircleSplit s = split_by_circle(R.at(i, j).den());
            if (!s.circle.is_one() || !s.outside.is_one()) return false;
        }
    return true;
}

bool poles_only_outside(const RatMat& R) {
    for (int i = 0; i < R.size(); ++i)
        for (int j = 0; j < R.size(); ++j) {
            CircleSplit s = split_by_circle(R.at(i, j).den());
            if (!s.inside.is_one() || !s.circle.is_one()) return false;
        }
    return true;
}

bool proper_at_infinity(const RatMat& R) {
    for (int i = 0; i < R.size(); ++i)
        for (int j = 0; j < R.size(); ++j)
            if (!R.at(i, j).proper_at_infinity()) return false;
    return true;
}

// Monic polynomial with roots only on T?
bool roots_only_on_circle(const Polynomial& p) {
    CircleSplit s = split_by_circle(p);
    return s.inside.is_one() && s.outside.is_one();
}

// Minimal z-order over the nonzero entries; -1 for the zero matrix.
int matrix_order_at_zero(const MatPoly& P) {
    int order = -1;
    for (int i = 0; i < P.size(); ++i)
        for (int j = 0; j < P.size(); ++j) {
            const Polynomial& e = P.at(i, j);
            if (e.is_zero()) continue;
            int o = e.order_at_zero();
            if (order < 0 || o < order) order = o;
        }
    return order;
}

MatPoly shift_matrix_down(const MatPoly& P, int s) {
    MatPoly out(P.size());
    for (int i = 0; i < P.size(); ++i)
        for (int j = 0; j < P.size(); ++j)
            if (!P.at(i, j).is_zero()) out.at(i, j) = P.at(i, j).shift_down(s);
    return out;
}

}  // namespace

RatMat WHFactorization::product() const {
    return (Omega_minus * diag_rat(Omega_circ) * RatMat(P0) * Omega_plus) * zpow(-k);
}

std::pair<WHFactorization, PipelineTrace> wh_factorize(const RatMatFun& om) {
    PipelineTrace tr;
    int m = om.m;

    // Step 1
    tr.q = om.q;
    tr.split_q = split_q_inverse(om.q);
    int kappa = tr.split_q.kappa;

    // Step 2
    tr.P1 = om.P1;
    ThreeWaySmith s1 = smith_three_way(tr.P1);
    tr.E1 = s1.E;
    tr.F1 = s1.F;
    tr.D1_minus = s1.d_minus;
    tr.D1_circ = s1.d_circ;
    tr.D1_plus = s1.d_plus;
    assert_step(tr.E1 * MatPoly::diagonal(diag_product(diag_product(tr.D1_minus, tr.D1_circ), tr.D1_plus)) * tr.F1 == tr.P1,
                "step 2: Smith product identity");

    // Step 3
    MatPoly core = tr.E1 * MatPoly::diagonal(diag_product(tr.D1_minus, tr.D1_circ));
    tr.N = core.degree();
    tr.P2 = core.reverse(tr.N);
    assert_step(RatMat(tr.P1) ==
                    RatMat(tr.P2).subst_inv() * RatMat(MatPoly::diagonal(tr.D1_plus)) * RatMat(tr.F1) * zpow(tr.N),
                "step 3: P1(z) = z^N P2(1/z) D1+(z) F1(z)");

    ThreeWaySmith s2 = smith_three_way(tr.P2);
    tr.E2 = s2.E;
    tr.F2 = s2.F;
    tr.D2_minus = s2.d_minus;
    tr.D2_circ = s2.d_circ;
    tr.D2_plus = s2.d_plus;
    assert_step(tr.E2 * MatPoly::diagonal(diag_product(diag_product(tr.D2_minus, tr.D2_circ), tr.D2_plus)) * tr.F2 == tr.P2,
                "step 3: Smith product identity for P2");

    for (int j = 0; j < m; ++j) {
        const Polynomial& dm = tr.D2_minus[j];
        assert_step(dm.order_at_zero() == dm.degree(), "step 3: inside part of P2 not a z-power");
        tr.rho.push_back(dm.degree());

        const Polynomial& p = tr.D2_circ[j];
        GR p0 = p.coeff(0);
        assert_step(!p0.is_zero(), "step 3: circle factor vanishes at 0");
        tr.p_at_zero.push_back(p0);
        tr.eta.push_back(p.degree());
        Polynomial tilde = poly_reverse(p, p.degree(), /*conjugate=*/false) * p0.inverse();
        tr.D2_circ_tilde.push_back(tilde);
        // p(1/z) = tilde(z) * p(0) / z^{eta}
        assert_step(RationalFunction(p).subst_inv() ==
                        RationalFunction(tilde) * RationalFunction(p0) * zpow(-tr.eta[j]),
                    "step 3: circle/zero resplit identity");
    }

    // Step 4
    std::vector<RationalFunction> head(m);
    for (int j = 0; j < m; ++j)
        head[j] = RationalFunction(Polynomial::constant(tr.p_at_zero[j]),
                                   Polynomial::monomial(tr.eta[j] + tr.rho[j]));
    RatMat tail = diag_rat(head) * RatMat(tr.F2).subst_inv();
    tr.K = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const RationalFunction& e = tail.at(i, j);
            if (e.is_zero()) continue;
            assert_step(e.den().order_at_zero() == e.den().degree(),
                        "step 4: non-monomial denominator in P3 assembly");
            tr.K = std::max(tr.K, e.den().degree());
        }
    tr.P3 = MatPoly(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            RationalFunction e = tail.at(i, j) * zpow(tr.K);
            assert_step(e.is_polynomial(), "step 4: P3 entry not polynomial");
            tr.P3.at(i, j) = e.num();
        }
    tr.split3 = qr_split_at_zero(tr.P3);
    assert_step(matpoly_det(tr.split3.R).is_constant(), "step 4: residual determinant not constant");

    // Assembly with the canonical z-power normalization.
    WHFactorization fact;
    int shift = tr.N - tr.K + kappa;
    if (shift <= 0) {
        fact.k = -shift;
        fact.P0 = tr.split3.Q;
    } else {
        fact.k = 0;
        fact.P0 = tr.split3.Q * Polynomial::monomial(shift);
    }
    if (fact.k > 0) {
        int j = matrix_order_at_zero(fact.P0);
        if (j > 0) {
            int drop = std::min(fact.k, j);
            fact.P0 = shift_matrix_down(fact.P0, drop);
            fact.k -= drop;
        }
    }

    fact.Omega_minus =
        (RatMat(tr.E2).subst_inv() * RatMat(MatPoly::diagonal(tr.D2_plus)).subst_inv()) *
        tr.split_q.omega_minus;
    for (int j = 0; j < m; ++j)
        fact.Omega_circ.push_back(tr.split_q.omega_circ * RationalFunction(tr.D2_circ_tilde[j]));
    fact.Omega_plus =
        RatMat(tr.split3.R * MatPoly::diagonal(tr.D1_plus) * tr.F1) * tr.split_q.omega_plus;

    assert_step(fact.product() == om.omega(), "assembly: product identity");
    return {std::move(fact), std::move(tr)};
}

bool is_minus_unit(const RatMat& R) {
    RatMat inv = ratmat_inverse(R);
    return poles_only_inside(R) && poles_only_inside(inv) && proper_at_infinity(R) &&
           proper_at_infinity(inv);
}

bool is_plus_unit(const RatMat& R) {
    RatMat inv = ratmat_inverse(R);
    return poles_only_outside(R) && poles_only_outside(inv);
}

WHVerification verify_wh(const RatMatFun& om, const WHFactorization& fact) {
    WHVerification v;
    int m = om.m;
    if (fact.P0.size() != m || fact.Omega_minus.size() != m || fact.Omega_plus.size() != m ||
        static_cast<int>(fact.Omega_circ.size()) != m || fact.k < 0)
        return v;

    v.product_equal = (fact.product() == om.omega());
    v.minus_unit = is_minus_unit(fact.Omega_minus);
    v.plus_unit = is_plus_unit(fact.Omega_plus);

    v.circ_on_circle = true;
    for (const RationalFunction& f : fact.Omega_circ) {
        if (f.is_zero() || !roots_only_on_circle(f.num()) || !roots_only_on_circle(f.den()))
            v.circ_on_circle = false;
    }

    // (e) P0 shape and the k coupling
    v.p0_form = fact.P0.is_lower_triangular();
    int n_total = 0;
    for (int i = 0; i < m && v.p0_form; ++i) {
        const Polynomial& d = fact.P0.at(i, i);
        if (d.is_zero() || d.order_at_zero() != d.degree() || !d.is_monic()) {
            v.p0_form = false;
            break;
        }
        n_total += d.degree();
        for (int j = 0; j < i; ++j)
            if (!fact.P0.at(i, j).is_zero() && fact.P0.at(i, j).degree() >= d.degree())
                v.p0_form = false;
    }
    if (v.p0_form && matpoly_det(fact.P0) != Polynomial::monomial(n_total)) v.p0_form = false;
    if (v.p0_form && fact.k > 0 && matrix_order_at_zero(fact.P0) != 0) v.p0_form = false;

    // (f) q_circ * Omega_circ is the Smith form of P1 with respect to T
    CircleSplit qs = split_by_circle(om.q);
    std::vector<Polynomial> d_circ;
    bool all_poly = true;
    for (const RationalFunction& f : fact.Omega_circ) {
        RationalFunction g = f * RationalFunction(qs.circle);
        if (!g.is_polynomial()) all_poly = false;
        d_circ.push_back(g.num());
    }
    v.circ_matches_smith = all_poly && d_circ == regional_smith(om.P1, Region::OnCircle).D;

    // (g) P+ = q+ Omega_plus, D_circ, and P-(1/z) = z^{-deg q-} q- Omega_minus
    // are matrix polynomials
    v.polynomial_parts = all_poly;
    RatMat Pplus = fact.Omega_plus * RationalFunction(qs.outside * qs.constant);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (!Pplus.at(i, j).is_polynomial()) v.polynomial_parts = false;
    RatMat Pminus =
        (fact.Omega_minus * RationalFunction(qs.inside, Polynomial::monomial(qs.inside.degree())))
            .subst_inv();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (!Pminus.at(i, j).is_polynomial()) v.polynomial_parts = false;

    return v;
}

Diag2x2 diagonalize_2x2(const RatMatFun& xi) {
    if (xi.m != 2) throw ShapeMismatch("diagonalize_2x2 needs a 2x2 input");
    RatMat om = xi.omega();
    if (!om.at(0, 1).is_zero()) throw ShapeMismatch("upper right entry must be zero");

    const RationalFunction& a = om.at(0, 0);
    const RationalFunction& c = om.at(1, 1);
    if (a.is_zero() || c.is_zero()) throw ShapeMismatch("diagonal entries must be nonzero");
    if (a.num().order_at_zero() != a.num().degree() || !a.num().is_monic())
        throw ShapeMismatch("entry (1,1) must be z^k1/q1");
    if (c.num().order_at_zero() != c.num().degree() || !c.num().is_monic())
        throw ShapeMismatch("entry (2,2) must be z^k2/q2");
    int k1 = a.num().degree(), k2 = c.num().degree();
    Polynomial q1 = a.den(), q2 = c.den();
    if (!roots_only_on_circle(q2)) throw ShapeMismatch("q2 must have roots only on T");
    if (!poly_divrem(q2, q1).rem.is_zero()) throw ShapeMismatch("q1 must divide q2");
    Polynomial q0 = poly_div_exact(q2, q1);

    // recover d: the (2,1) entry is d/q2 in lowest terms
    const RationalFunction& b = om.at(1, 0);
    if (b.is_zero()) {
        Diag2x2 out;
        out.outer_minus = RatMat::identity(2);
        out.middle = {a, c};
        out.outer_plus = RatMat::identity(2);
        return out;
    }
    if (!poly_divrem(q2, b.den()).rem.is_zero())
        throw ShapeMismatch("entry (2,1) denominator must divide q2");
    Polynomial d = b.num() * poly_div_exact(q2, b.den());
    if (d.degree() >= k2) throw ShapeMismatch("deg d must be below k2");

    int k12 = d.order_at_zero();
    Polynomial d0 = d.shift_down(k12);
    int e = k2 - k12;  // > deg d0 >= 0 since k12 + deg d0 < k2

    // Bezout: d0 p1 + z^e p2 = 1 with deg p1 < e
    ExtendedGcd eg = poly_extended_gcd(d0, Polynomial::monomial(e));
    if (!eg.g.is_constant()) throw PreconditionViolated("d0 and z^e are not coprime");
    GR inv_g = eg.g.coeff(0).inverse();
    Polynomial s = eg.s * inv_g, t = eg.t * inv_g;
    auto [u, p1] = poly_divrem(s, Polynomial::monomial(e));
    Polynomial p2 = t + d0 * u;

    if (k1 + q0.degree() + (p1.is_zero() ? 0 : p1.degree()) > k12)
        throw ConditionFailed("k1 + deg q0 + deg p1 exceeds k12");

    Diag2x2 out;
    out.outer_plus = RatMat(2);
    out.outer_plus.at(0, 0) = RationalFunction(-Polynomial::monomial(e));
    out.outer_plus.at(0, 1) = RationalFunction(p1);
    out.outer_plus.at(1, 0) = RationalFunction(d0);
    out.outer_plus.at(1, 1) = RationalFunction(p2);

    out.outer_minus = RatMat::identity(2);
    out.outer_minus.at(0, 0) = RationalFunction(Polynomial::constant(GR(-1)));
    out.outer_minus.at(0, 1) =
        RationalFunction(Polynomial::monomial(k1) * p1 * q0, Polynomial::monomial(k12));

    out.middle = {RationalFunction(Polynomial::monomial(k1 + k2 - k12), q1),
                  RationalFunction(Polynomial::monomial(k12), q2)};

    if (out.outer_minus * om * out.outer_plus != diag_rat(out.middle))
        throw InvalidFactorization("2x2 diagonalization identity failed");
    return out;
}

}  // namespace whtk
