#include "whtk/circle_locus.hpp"

#include <algorithm>
#include <map>

namespace whtk {
namespace {

// ---------------------------------------------------------------------------
// Gaussian integer helpers for the rational-root search (Z[i] is Euclidean;
// divisor candidates are enumerated through the factorization of the norm).

using Int = mpz_class;

struct GInt {
    Int re, im;

    bool is_zero() const { return re == 0 && im == 0; }
    GInt conj() const { return {re, -im}; }
    Int norm() const { return re * re + im * im; }

    friend GInt operator*(const GInt& a, const GInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GInt& a, const GInt& b) { return a.re == b.re && a.im == b.im; }
};

// Exact division in Z[i]; returns false when d does not divide a.
bool gint_divide(const GInt& a, const GInt& d, GInt& q) {
    Int n = d.norm();
    if (n == 0) return false;
    GInt t = a * d.conj();
    if (t.re % n != 0 || t.im % n != 0) return false;
    q = {t.re / n, t.im / n};
    return true;
}

int gint_valuation(GInt& a, const GInt& pi) {
    int e = 0;
    GInt q;
    while (!a.is_zero() && gint_divide(a, pi, q)) {
        a = q;
        ++e;
    }
    return e;
}

// x^2 + y^2 = p for a prime p = 1 (mod 4) or p = 2.
GInt two_square_decomposition(const Int& p) {
    for (Int x = 1; x * x <= p; ++x) {
        Int y2 = p - x * x;
        if (mpz_perfect_square_p(y2.get_mpz_t())) {
            Int y;
            mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
            return {x, y};
        }
    }
    throw PreconditionViolated("no two-square decomposition (not a 1 mod 4 prime)");
}

// All divisors of g up to unit multiples.
std::vector<GInt> gaussian_divisors(GInt g) {
    std::vector<std::pair<GInt, int>> primes;
    Int n = g.norm();
    auto take_prime = [&](const Int& p) {
        if (p == 2) {
            GInt pi{1, 1};
            if (int e = gint_valuation(g, pi); e > 0) primes.push_back({pi, e});
        } else if (p % 4 == 3) {
            GInt pi{p, 0};
            if (int e = gint_valuation(g, pi); e > 0) primes.push_back({pi, e});
        } else {
            GInt pi = two_square_decomposition(p);
            if (int e = gint_valuation(g, pi); e > 0) primes.push_back({pi, e});
            GInt pic = pi.conj();
            if (int e = gint_valuation(g, pic); e > 0) primes.push_back({pic, e});
        }
    };
    if (n % 2 == 0) {
        take_prime(2);
        while (n % 2 == 0) n /= 2;
    }
    for (Int d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            take_prime(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) take_prime(n);

    std::vector<GInt> divisors{GInt{1, 0}};
    for (const auto& [pi, e] : primes) {
        std::vector<GInt> next;
        next.reserve(divisors.size() * (e + 1));
        for (const GInt& d : divisors) {
            GInt cur = d;
            next.push_back(cur);
            for (int k = 0; k < e; ++k) {
                cur = cur * pi;
                next.push_back(cur);
            }
        }
        divisors = std::move(next);
    }
    return divisors;
}

// Gaussian-rational roots of f (f nonzero, f(0) != 0). Each root of f in
// Q(i) appears exactly once in the result when f is squarefree.
std::vector<GR> rational_roots(const Polynomial& f) {
    if (f.degree() < 1) return {};
    // Clear denominators to Z[i] coefficients.
    Int scale = 1;
    for (const GR& c : f.coeffs()) {
        scale = lcm(scale, c.re().get_den());
        scale = lcm(scale, c.im().get_den());
    }
    std::vector<GInt> zi;
    zi.reserve(f.coeffs().size());
    for (const GR& c : f.coeffs()) {
        Rational re = c.re() * scale, im = c.im() * scale;
        re.canonicalize();
        im.canonicalize();
        zi.push_back({re.get_num(), im.get_num()});
    }
    auto num_divs = gaussian_divisors(zi.front());
    auto den_divs = gaussian_divisors(zi.back());

    static const GR units[4] = {GR(1), GR::i(), GR(-1), GR(0) - GR::i()};
    std::vector<GR> roots;
    auto seen = [&roots](const GR& a) {
        return std::any_of(roots.begin(), roots.end(), [&](const GR& b) { return a == b; });
    };
    for (const GInt& u : num_divs) {
        for (const GInt& v : den_divs) {
            GR base = GR(Rational(u.re), Rational(u.im)) / GR(Rational(v.re), Rational(v.im));
            for (const GR& unit : units) {
                GR cand = unit * base;
                if (!seen(cand) && f.eval(cand).is_zero()) roots.push_back(cand);
            }
        }
    }
    return roots;
}

Polynomial conj_reverse(const Polynomial& p) { return poly_reverse(p, p.degree(), /*conjugate=*/true); }

LocusCounts counts_general(const Polynomial& p);

int sign_at_infinity(const Polynomial& p, bool negative_end) {
    int s = sgn(p.lead().re());
    if (negative_end && p.degree() % 2 != 0) s = -s;
    return s;
}

int sign_variations_at_infinity(const std::vector<Polynomial>& chain, bool negative_end) {
    int vars = 0, prev = 0;
    for (const Polynomial& p : chain) {
        int s = sign_at_infinity(p, negative_end);
        if (s != 0 && prev != 0 && s != prev) ++vars;
        if (s != 0) prev = s;
    }
    return vars;
}

// Inside-disk root count by the argument principle, for f with no roots on
// the unit circle. The Moebius map z = (i - t)/(i + t) carries the open
// disk onto the upper half-plane and the circle onto the real axis, so the
// count becomes a Cauchy index along R of the transformed polynomial,
// evaluated exactly with a Sturm chain. Unlike the Schur-Cohn recursion
// this has no degenerate cases, so it serves as the fallback when a
// reflection coefficient lands on the circle.
int cauchy_inside_count(const Polynomial& f) {
    int n = f.degree();
    if (n <= 0) return 0;
    // F(t) = sum_k a_k (i - t)^k (i + t)^(n-k); lead coefficient is
    // +-f(-1), nonzero since -1 is not a root.
    Polynomial minus{GR::i(), GR(-1)};
    Polynomial plus{GR::i(), GR(1)};
    std::vector<Polynomial> plus_pow(n + 1);
    plus_pow[0] = Polynomial::one();
    for (int k = 1; k <= n; ++k) plus_pow[k] = plus_pow[k - 1] * plus;
    Polynomial F = Polynomial::zero();
    Polynomial minus_pow = Polynomial::one();
    for (int k = 0; k <= n; ++k) {
        F += f.coeff(k) * (minus_pow * plus_pow[n - k]);
        minus_pow *= minus;
    }
    // F = A + iB with real-coefficient A, B.
    std::vector<GR> are(F.coeffs().size()), bre(F.coeffs().size());
    for (std::size_t j = 0; j < F.coeffs().size(); ++j) {
        are[j] = GR(F.coeffs()[j].re());
        bre[j] = GR(F.coeffs()[j].im());
    }
    Polynomial A(std::move(are)), B(std::move(bre));
    if (A.is_zero() || B.is_zero()) return n / 2;  // Cauchy index is zero
    Polynomial g = poly_gcd(A, B);  // no real roots when f avoids the circle
    A = poly_div_exact(A, g);
    B = poly_div_exact(B, g);

    // Sturm chain with negated remainders: V(-inf) - V(+inf) = I(B/A).
    std::vector<Polynomial> chain{A, B};
    while (true) {
        Polynomial r = poly_divrem(chain[chain.size() - 2], chain.back()).rem;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    int index = sign_variations_at_infinity(chain, true) - sign_variations_at_infinity(chain, false);
    // zeros in the upper half-plane: (n - I)/2 by the winding of F along R
    return (n - index) / 2;
}

// Schur-Cohn when it applies, Cauchy index when it degenerates.
int inside_count_off_circle(const Polynomial& h) {
    try {
        return schur_cohn_inside_count(h);
    } catch (const SingularSchurCohn&) {
        return cauchy_inside_count(h);
    }
}

// Counts for a squarefree factor; mutual recursion with counts_general
// through the derivative of the self-inversive part.
LocusCounts counts_squarefree(Polynomial f) {
    LocusCounts counts;
    if (f.degree() < 1) return counts;
    // Gaussian-rational roots are located directly.
    if (int k = f.order_at_zero(); k > 0) {
        counts.inside += k;
        f = f.shift_down(k);
    }
    for (const GR& root : rational_roots(f)) {
        switch (locate_linear(root)) {
            case RootLocus::InsideDisk: ++counts.inside; break;
            case RootLocus::OnCircle: ++counts.on_circle; break;
            case RootLocus::OutsideDisk: ++counts.outside; break;
        }
        f = poly_div_exact(f, Polynomial{-root, GR(1)});
    }
    if (f.degree() < 1) return counts;

    // g carries the roots fixed or paired by the reflection a -> 1/conj(a):
    // the on-circle roots plus reciprocal pairs. h has no on-circle roots.
    Polynomial g = poly_gcd(f, conj_reverse(f));
    Polynomial h = poly_div_exact(f, g);
    if (h.degree() >= 1) {
        int inside_h = inside_count_off_circle(h);
        counts.inside += inside_h;
        counts.outside += h.degree() - inside_h;
    }
    if (g.degree() >= 1) {
        // g is self-inversive; by Cohn's theorem its on-circle root count is
        // deg g minus twice the number of roots of g' outside the closed
        // disk. Reciprocal pairs split evenly between inside and outside.
        LocusCounts dc = counts_general(g.derivative());
        int on_g = g.degree() - 2 * dc.outside;
        if (on_g < 0 || (g.degree() - on_g) % 2 != 0)
            throw SingularSchurCohn("inconsistent self-inversive root count");
        counts.on_circle += on_g;
        counts.inside += (g.degree() - on_g) / 2;
        counts.outside += (g.degree() - on_g) / 2;
    }
    return counts;
}

LocusCounts counts_general(const Polynomial& p) {
    LocusCounts total;
    if (p.is_zero()) throw PreconditionViolated("root counts of the zero polynomial");
    for (const auto& [factor, mult] : poly_squarefree(p)) {
        LocusCounts c = counts_squarefree(factor);
        total.inside += mult * c.inside;
        total.on_circle += mult * c.on_circle;
        total.outside += mult * c.outside;
    }
    return total;
}

}  // namespace

const char* to_string(RootLocus locus) {
    switch (locus) {
        case RootLocus::InsideDisk: return "inside";
        case RootLocus::OnCircle: return "circle";
        case RootLocus::OutsideDisk: return "outside";
    }
    return "?";
}

RootLocus locate_linear(const GaussianRational& root) {
    Rational n = root.norm();
    if (n < 1) return RootLocus::InsideDisk;
    if (n == 1) return RootLocus::OnCircle;
    return RootLocus::OutsideDisk;
}

Polynomial FactoredPolynomial::expand() const {
    Polynomial p = Polynomial::constant(constant);
    for (const auto& f : factors) p *= f.factor.pow(f.multiplicity);
    return p;
}

int schur_cohn_inside_count(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionViolated("Schur-Cohn count of the zero polynomial");
    int n = p.degree();
    if (n == 0) return 0;
    GR a0 = p.coeff(0);
    GR an = p.lead();
    Rational delta = a0.norm() - an.norm();
    if (delta == 0) throw SingularSchurCohn("unit-modulus reflection coefficient");
    Polynomial tp = a0.conj() * p - an * conj_reverse(p);
    if (tp.is_zero()) throw SingularSchurCohn("Schur transform vanished");
    int sub = schur_cohn_inside_count(tp);
    return delta > 0 ? sub : n - sub;
}

LocusCounts locus_counts(const Polynomial& p) { return counts_general(p); }

RootLocus certify_locus(const Polynomial& p) {
    if (p.degree() < 1) throw PreconditionViolated("certify_locus needs deg >= 1");
    LocusCounts c = counts_squarefree(p.monic());
    int n = p.degree();
    if (c.inside == n) return RootLocus::InsideDisk;
    if (c.on_circle == n) return RootLocus::OnCircle;
    if (c.outside == n) return RootLocus::OutsideDisk;
    throw MixedLocationFactor("roots straddle the unit circle: " + to_string(p));
}

FactoredPolynomial factor_over_Qi(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionViolated("cannot factor the zero polynomial");
    FactoredPolynomial out;
    out.constant = p.lead();
    for (const auto& [sf, mult] : poly_squarefree(p)) {
        Polynomial f = sf;
        if (f.order_at_zero() > 0) {
            out.factors.push_back({Polynomial::z(), mult, RootLocus::InsideDisk});
            f = f.shift_down(1);
        }
        for (const GR& root : rational_roots(f)) {
            Polynomial lin{-root, GR(1)};
            out.factors.push_back({lin, mult, locate_linear(root)});
            f = poly_div_exact(f, lin);
        }
        if (f.degree() >= 1) {
            std::optional<RootLocus> locus;
            try {
                locus = certify_locus(f);
            } catch (const MixedLocationFactor&) {
            } catch (const SingularSchurCohn&) {
            }
            out.factors.push_back({f, mult, locus});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const LocatedFactor& a, const LocatedFactor& b) {
        return compare_for_ordering(a.factor, b.factor) < 0;
    });
    return out;
}

CircleSplit split_by_circle(const Polynomial& p) {
    FactoredPolynomial f = factor_over_Qi(p);
    CircleSplit split{f.constant, Polynomial::one(), Polynomial::one(), Polynomial::one()};
    for (const auto& lf : f.factors) {
        RootLocus locus = lf.locus ? *lf.locus : certify_locus(lf.factor);
        Polynomial power = lf.factor.pow(lf.multiplicity);
        switch (locus) {
            case RootLocus::InsideDisk: split.inside *= power; break;
            case RootLocus::OnCircle: split.circle *= power; break;
            case RootLocus::OutsideDisk: split.outside *= power; break;
        }
    }
    return split;
}

QInverseSplit split_q_inverse(const Polynomial& q) {
    CircleSplit s = split_by_circle(q);
    QInverseSplit out;
    out.kappa = -s.inside.degree();
    out.omega_minus = RationalFunction(Polynomial::monomial(s.inside.degree()), s.inside);
    out.omega_circ = RationalFunction(Polynomial::one(), s.circle);
    out.omega_plus = RationalFunction(Polynomial::one(), s.outside * s.constant);
    return out;
}

}  // namespace whtk
