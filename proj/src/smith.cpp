#include "whtk/smith.hpp"

#include <algorithm>

namespace whtk {
namespace {

// Positive rational c such that c*v has Gaussian-integer coefficients with no
// common rational integer factor. Unit scalings like this keep the repeated
// division-restart cycle from compounding coefficient sizes.
GR primitive_scale(const std::vector<const Polynomial*>& v) {
    mpz_class l(1), g(0);
    for (const Polynomial* p : v)
        for (const GR& c : p->coeffs()) {
            l = lcm(l, c.re().get_den());
            l = lcm(l, c.im().get_den());
        }
    for (const Polynomial* p : v)
        for (const GR& c : p->coeffs()) {
            g = gcd(g, mpz_class(c.re().get_num() * (l / c.re().get_den())));
            g = gcd(g, mpz_class(c.im().get_num() * (l / c.im().get_den())));
        }
    if (g == 0) return GR(1);
    Rational scale(l, g);
    scale.canonicalize();
    return GR(scale);
}

// Elementary-operation bookkeeping maintaining P = E * A * F throughout.
struct Reduction {
    MatPoly A, E, F;

    explicit Reduction(const MatPoly& P) : A(P), E(MatPoly::identity(P.size())), F(MatPoly::identity(P.size())) {}

    int m() const { return A.size(); }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < m(); ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int r = 0; r < m(); ++r) std::swap(E.at(r, i), E.at(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m(); ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int c = 0; c < m(); ++c) std::swap(F.at(i, c), F.at(j, c));
    }
    // row_j += c * row_i
    void add_row(int j, int i, const Polynomial& c) {
        for (int col = 0; col < m(); ++col) A.at(j, col) += c * A.at(i, col);
        for (int r = 0; r < m(); ++r) E.at(r, i) -= c * E.at(r, j);
    }
    // col_j += c * col_i
    void add_col(int j, int i, const Polynomial& c) {
        for (int r = 0; r < m(); ++r) A.at(r, j) += c * A.at(r, i);
        for (int col = 0; col < m(); ++col) F.at(i, col) -= c * F.at(j, col);
    }
    // row_i *= c (constant), compensated in E
    void scale_row(int i, const GaussianRational& c) {
        for (int col = 0; col < m(); ++col) A.at(i, col) = A.at(i, col) * c;
        GR inv = c.inverse();
        for (int r = 0; r < m(); ++r) E.at(r, i) = E.at(r, i) * inv;
    }
    // col_i *= c (constant), compensated in F
    void scale_col(int i, const GaussianRational& c) {
        for (int r = 0; r < m(); ++r) A.at(r, i) = A.at(r, i) * c;
        GR inv = c.inverse();
        for (int col = 0; col < m(); ++col) F.at(i, col) = F.at(i, col) * inv;
    }
    // Strip the rational content of row i / column j; a no-op when the row or
    // column is already integer-primitive, so small inputs are untouched.
    void primitivize_row(int i) {
        std::vector<const Polynomial*> v(m());
        for (int j = 0; j < m(); ++j) v[j] = &A.at(i, j);
        GR s = primitive_scale(v);
        if (!s.is_one()) scale_row(i, s);
    }
    void primitivize_col(int j) {
        std::vector<const Polynomial*> v(m());
        for (int i = 0; i < m(); ++i) v[i] = &A.at(i, j);
        GR s = primitive_scale(v);
        if (!s.is_one()) scale_col(j, s);
    }
    // One unimodular 2x2 column step replacing a whole Euclid restart cascade:
    // with p = A(t,t), a = A(t,j) and g = s*p + u*a = gcd(p,a), columns (t, j)
    // become (s*col_t + u*col_j, (p/g)*col_j - (a/g)*col_t), so the pivot turns
    // into the (monic) gcd and the cleared entry into 0 in a single move.
    void bezout_cols(int t, int j) {
        Polynomial p = A.at(t, t), a = A.at(t, j);
        ExtendedGcd eg = poly_extended_gcd(p, a);
        Polynomial pg = poly_div_exact(p, eg.g), ag = poly_div_exact(a, eg.g);
        for (int r = 0; r < m(); ++r) {
            Polynomial ct = A.at(r, t), cj = A.at(r, j);
            A.at(r, t) = eg.s * ct + eg.t * cj;
            A.at(r, j) = pg * cj - ag * ct;
        }
        // F gets the inverse block [[p/g, a/g], [-u, s]] acting on rows t, j.
        for (int c = 0; c < m(); ++c) {
            Polynomial ft = F.at(t, c), fj = F.at(j, c);
            F.at(t, c) = pg * ft + ag * fj;
            F.at(j, c) = eg.s * fj - eg.t * ft;
        }
    }
    // Row analogue: with p = A(t,t), a = A(i,t), rows (t, i) become
    // (s*row_t + u*row_i, (p/g)*row_i - (a/g)*row_t).
    void bezout_rows(int t, int i) {
        Polynomial p = A.at(t, t), a = A.at(i, t);
        ExtendedGcd eg = poly_extended_gcd(p, a);
        Polynomial pg = poly_div_exact(p, eg.g), ag = poly_div_exact(a, eg.g);
        for (int c = 0; c < m(); ++c) {
            Polynomial rt = A.at(t, c), ri = A.at(i, c);
            A.at(t, c) = eg.s * rt + eg.t * ri;
            A.at(i, c) = pg * ri - ag * rt;
        }
        // E gets the inverse block [[p/g, -u], [a/g, s]] acting on cols t, i.
        for (int r = 0; r < m(); ++r) {
            Polynomial et = E.at(r, t), ei = E.at(r, i);
            E.at(r, t) = pg * et + ag * ei;
            E.at(r, i) = eg.s * ei - eg.t * et;
        }
    }
};

// Minimal-degree nonzero entry in the leading t+1 x t+1 block.  The incumbent
// pivot A(t,t) wins ties; otherwise ties go to the first row-major position.
bool find_pivot(const MatPoly& A, int t, int& pi, int& pj) {
    int best = -1;
    if (!A.at(t, t).is_zero()) {
        best = A.at(t, t).degree();
        pi = t;
        pj = t;
    }
    for (int i = 0; i <= t; ++i)
        for (int j = 0; j <= t; ++j) {
            const Polynomial& e = A.at(i, j);
            if (e.is_zero()) continue;
            if (best < 0 || e.degree() < best) {
                best = e.degree();
                pi = i;
                pj = j;
            }
        }
    return best >= 0;
}

}  // namespace

const char* to_string(Region region) {
    switch (region) {
        case Region::InsideDisk: return "inside";
        case Region::OnCircle: return "circle";
        case Region::OutsideDisk: return "outside";
        case Region::WholePlane: return "whole-plane";
    }
    return "?";
}

bool locus_in_region(RootLocus locus, Region region) {
    switch (region) {
        case Region::WholePlane: return true;
        case Region::InsideDisk: return locus == RootLocus::InsideDisk;
        case Region::OnCircle: return locus == RootLocus::OnCircle;
        case Region::OutsideDisk: return locus == RootLocus::OutsideDisk;
    }
    return false;
}

RegionSplit split_by_region(const Polynomial& p, Region region) {
    if (region == Region::WholePlane) return {p.lead(), p.monic(), Polynomial::one()};
    CircleSplit s = split_by_circle(p);
    switch (region) {
        case Region::InsideDisk: return {s.constant, s.inside, s.circle * s.outside};
        case Region::OnCircle: return {s.constant, s.circle, s.inside * s.outside};
        default: return {s.constant, s.outside, s.inside * s.circle};
    }
}

namespace {

std::size_t max_coeff_bits(const MatPoly& M) {
    std::size_t b = 0;
    for (int i = 0; i < M.size(); ++i)
        for (int j = 0; j < M.size(); ++j)
            for (const GR& c : M.at(i, j).coeffs())
                b = std::max({b, mpz_sizeinbase(c.re().get_num().get_mpz_t(), 2),
                              mpz_sizeinbase(c.re().get_den().get_mpz_t(), 2),
                              mpz_sizeinbase(c.im().get_num().get_mpz_t(), 2),
                              mpz_sizeinbase(c.im().get_den().get_mpz_t(), 2)});
    return b;
}

// Core reduction.  With bezout == false, an inexact division restarts the
// pivot stage with the (smaller-degree) remainder as the next pivot — a plain
// Euclid cascade whose elementary steps keep small inputs small; its
// intermediate coefficients can swell on larger ones, so it runs under a
// fuel/size budget and reports failure instead of grinding.  With
// bezout == true, inexact divisions use the 2x2 extended-gcd steps, whose
// intermediate sizes stay near the size of the answer.
bool reduce(Reduction& red, bool bezout) {
    const int m = red.m();
    long fuel = 64L * m * m;

    // Reduce at the bottom-right corner of the shrinking leading block: the
    // minimal-degree pivot lands last on the diagonal, which produces the
    // ordering d_{j+1} | d_j directly.
    for (int t = m - 1; t >= 0; --t) {
        for (;;) {
            if (!bezout && (--fuel < 0 || max_coeff_bits(red.A) > 256)) return false;
            int pi = t, pj = t;
            if (!find_pivot(red.A, t, pi, pj)) throw SingularMatrix();
            // Determinant-preserving swaps: the displaced row/column is
            // negated, so det(E) and det(F) are invariant under placement.
            if (pi != t) {
                red.swap_rows(t, pi);
                red.scale_row(pi, GR(Rational(-1)));
            }
            if (pj != t) {
                red.swap_cols(t, pj);
                red.scale_col(pj, GR(Rational(-1)));
            }
            // Monic pivot right away keeps division quotients small.
            if (!red.A.at(t, t).is_monic()) red.scale_row(t, red.A.at(t, t).lead().inverse());

            // Clear row t left of the pivot, then column t above it.
            bool restart = false;
            for (int j = 0; j < t && !restart; ++j) {
                if (red.A.at(t, j).is_zero()) continue;
                auto [q, r] = poly_divrem(red.A.at(t, j), red.A.at(t, t));
                if (r.is_zero()) {
                    red.add_col(j, t, -q);
                } else if (bezout) {
                    red.bezout_cols(t, j);
                } else {
                    red.add_col(j, t, -q);
                    restart = true;
                }
                red.primitivize_col(j);
            }
            if (restart) continue;
            // Bezout row steps modify row t, which can repopulate the columns
            // just cleared; the pivot degree strictly drops with every Bezout
            // step, so restarting here terminates.
            for (int i = 0; i < t && !restart; ++i) {
                if (red.A.at(i, t).is_zero()) continue;
                auto [q, r] = poly_divrem(red.A.at(i, t), red.A.at(t, t));
                if (r.is_zero()) {
                    red.add_row(i, t, -q);
                } else if (bezout) {
                    red.bezout_rows(t, i);
                    restart = true;
                } else {
                    red.add_row(i, t, -q);
                    restart = true;
                }
                red.primitivize_row(i);
            }
            if (restart) continue;

            // Divisibility repair: fold a non-divisible entry into row t.
            bool repaired = false;
            for (int i = 0; i < t && !repaired; ++i)
                for (int j = 0; j < t && !repaired; ++j) {
                    if (poly_divrem(red.A.at(i, j), red.A.at(t, t)).rem.is_zero()) continue;
                    red.add_row(t, i, Polynomial::one());
                    repaired = true;
                }
            if (!repaired) break;
        }
        red.scale_row(t, red.A.at(t, t).lead().inverse());
    }
    return true;
}

}  // namespace

SmithDecomposition smith_decompose(const MatPoly& P) {
    if (matpoly_det(P).is_zero()) throw SingularMatrix();
    const int m = P.size();

    // The cascade is tried first: on small inputs it terminates quickly with
    // pleasantly small transforms.  When its budget trips, redo the whole
    // reduction with extended-gcd steps, which are guaranteed to finish.
    Reduction red(P);
    if (!reduce(red, /*bezout=*/false)) {
        red = Reduction(P);
        reduce(red, /*bezout=*/true);
    }

    SmithDecomposition out;
    out.E = red.E;
    out.F = red.F;
    out.D.resize(m);
    for (int i = 0; i < m; ++i) out.D[i] = red.A.at(i, i);
    return out;
}

std::vector<Polynomial> smith_invariants_via_minors(const MatPoly& P) {
    const int m = P.size();
    std::vector<Polynomial> gcds(m + 1);
    gcds[0] = Polynomial::one();
    for (int r = 1; r <= m; ++r) {
        // gcd over all r x r minors.
        std::vector<int> rows(r), cols(r);
        Polynomial g = Polynomial::zero();
        std::vector<int> rsel(r);
        for (int i = 0; i < r; ++i) rsel[i] = i;
        for (;;) {
            std::vector<int> csel(r);
            for (int j = 0; j < r; ++j) csel[j] = j;
            for (;;) {
                MatPoly sub(r);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) sub.at(i, j) = P.at(rsel[i], csel[j]);
                Polynomial minor = matpoly_det(sub);
                if (!minor.is_zero()) g = g.is_zero() ? minor.monic() : poly_gcd(g, minor);
                // next column combination
                int k = r - 1;
                while (k >= 0 && csel[k] == m - r + k) --k;
                if (k < 0) break;
                ++csel[k];
                for (int j = k + 1; j < r; ++j) csel[j] = csel[j - 1] + 1;
            }
            int k = r - 1;
            while (k >= 0 && rsel[k] == m - r + k) --k;
            if (k < 0) break;
            ++rsel[k];
            for (int i = k + 1; i < r; ++i) rsel[i] = rsel[i - 1] + 1;
        }
        if (g.is_zero()) throw SingularMatrix();
        gcds[r] = g;
    }
    std::vector<Polynomial> d(m);
    for (int j = 1; j <= m; ++j) d[m - j] = poly_div_exact(gcds[j], gcds[j - 1]).monic();
    return d;
}

SmithDecomposition regional_smith(const MatPoly& P, Region region) {
    SmithDecomposition s = smith_decompose(P);
    if (region == Region::WholePlane) {
        s.region = region;
        return s;
    }
    std::vector<Polynomial> off(P.size());
    for (int j = 0; j < P.size(); ++j) {
        RegionSplit split = split_by_region(s.D[j], region);
        s.D[j] = split.in_region;
        off[j] = split.off_region * split.constant;
    }
    s.F = MatPoly::diagonal(off) * s.F;
    s.region = region;
    return s;
}

SmithVerification verify_smith(const MatPoly& P, const SmithDecomposition& S) {
    SmithVerification v;
    v.product_equal = S.product() == P;

    Polynomial de = matpoly_det(S.E), df = matpoly_det(S.F);
    if (!de.is_zero() && !df.is_zero()) {
        if (!S.region || *S.region == Region::WholePlane) {
            v.outer_admissible = de.is_constant() && df.is_constant();
        } else {
            try {
                RegionSplit se = split_by_region(de, *S.region);
                RegionSplit sf = split_by_region(df, *S.region);
                v.outer_admissible = se.in_region.is_one() && sf.in_region.is_one();
            } catch (const Error&) {
                v.outer_admissible = false;
            }
        }
    }

    v.diagonal_monic = std::all_of(S.D.begin(), S.D.end(), [](const Polynomial& d) { return d.is_monic(); });

    v.divisibility_chain = true;
    for (std::size_t j = 0; j + 1 < S.D.size(); ++j)
        if (S.D[j + 1].is_zero() || !poly_divrem(S.D[j], S.D[j + 1]).rem.is_zero()) v.divisibility_chain = false;

    try {
        std::vector<Polynomial> expected = smith_invariants_via_minors(P);
        if (S.region && *S.region != Region::WholePlane)
            for (auto& e : expected) e = split_by_region(e, *S.region).in_region;
        v.matches_minor_invariants = expected == S.D;
    } catch (const Error&) {
        v.matches_minor_invariants = false;
    }
    return v;
}

}  // namespace whtk
