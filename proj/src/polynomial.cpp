#include "whtk/polynomial.hpp"

#include <algorithm>

namespace whtk {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int k, GaussianRational c) {
    if (c.is_zero()) return zero();
    std::vector<GR> v(static_cast<std::size_t>(k) + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
}

GaussianRational Polynomial::eval(const GaussianRational& x) const {
    GR acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<GR> v(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) v[j - 1] = coeffs_[j] * GR(static_cast<long>(j));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::conjugate_coeffs() const {
    std::vector<GR> v(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) v[j] = coeffs_[j].conj();
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return *this * lead().inverse();
}

int Polynomial::order_at_zero() const {
    if (is_zero()) throw PreconditionViolated("order_at_zero of the zero polynomial");
    int k = 0;
    while (coeffs_[k].is_zero()) ++k;
    return k;
}

Polynomial Polynomial::shift_down(int k) const {
    if (k == 0) return *this;
    if (is_zero()) return zero();
    if (order_at_zero() < k) throw PreconditionViolated("shift_down: z^k does not divide p");
    return Polynomial(std::vector<GR>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<GR> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<GR> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.coeff(static_cast<int>(j)) - b.coeff(static_cast<int>(j));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<GR> v(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) v[j] = -coeffs_[j];
    return Polynomial(std::move(v));
}

namespace {

// Clears denominators: d = lcm of all denominators of p, and zre/zim the
// scaled Gaussian-integer coefficient parts.
void to_integer_parts(const Polynomial& p, mpz_class& d, std::vector<mpz_class>& zre, std::vector<mpz_class>& zim) {
    d = 1;
    for (const GR& c : p.coeffs()) {
        d = lcm(d, c.re().get_den());
        d = lcm(d, c.im().get_den());
    }
    zre.resize(p.coeffs().size());
    zim.resize(p.coeffs().size());
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const GR& c = p.coeffs()[j];
        zre[j] = c.re().get_num() * (d / c.re().get_den());
        zim[j] = c.im().get_num() * (d / c.im().get_den());
    }
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    // Convolve Gaussian integers over a common denominator: one rational
    // canonicalization per output coefficient instead of one big-gcd per term,
    // which dominates the runtime once coefficients grow.
    mpz_class da, db;
    std::vector<mpz_class> are, aim, bre, bim;
    to_integer_parts(a, da, are, aim);
    to_integer_parts(b, db, bre, bim);
    std::size_t n = are.size() + bre.size() - 1;
    std::vector<mpz_class> rre(n), rim(n);
    for (std::size_t j = 0; j < are.size(); ++j)
        for (std::size_t k = 0; k < bre.size(); ++k) {
            rre[j + k] += are[j] * bre[k] - aim[j] * bim[k];
            rim[j + k] += are[j] * bim[k] + aim[j] * bre[k];
        }
    mpz_class den = da * db;
    std::vector<GR> v(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational re(rre[j], den), im(rim[j], den);
        re.canonicalize();
        im.canonicalize();
        v[j] = GR(std::move(re), std::move(im));
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const GaussianRational& c) {
    std::vector<GR> v(a.coeffs_.size());
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) v[j] = a.coeffs_[j] * c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(int e) const {
    Polynomial acc = one();
    for (int j = 0; j < e; ++j) acc *= *this;
    return acc;
}

DivRem poly_divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const int da = a.degree(), db = b.degree();
    if (a.is_zero() || da < db) return {Polynomial::zero(), a};
    // In-place synthetic division; no Polynomial temporaries per step.
    std::vector<GR> r(a.coeffs());
    std::vector<GR> q(da - db + 1);
    const GR lead_inv = b.lead().inverse();
    for (int k = da - db; k >= 0; --k) {
        GR c = r[k + db] * lead_inv;
        if (c.is_zero()) continue;
        q[k] = c;
        for (int i = 0; i < db; ++i) r[k + i] -= c * b.coeff(i);
        r[k + db] = GR(0);
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw PreconditionViolated("inexact polynomial division");
    return q;
}

namespace {

// Dense polynomial over the Gaussian integers, coefficients low to high.
// The gcd runs entirely here: a primitive pseudo-remainder sequence in mpz
// arithmetic, with not a single rational canonicalization until the final
// monic conversion.  A naive rational Euclid (exponential swell) and even a
// rational-coefficient subresultant scheme (an mpq gcd per operation) are far
// too slow at the sizes the factorization pipeline produces.
struct GZ {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

GZ gz_mul(const GZ& a, const GZ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

// Exact quotient a / b in Z[i]: (a * conj(b)) / |b|^2 with exact mpz division.
GZ gz_divexact(const GZ& a, const GZ& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class tre = a.re * b.re + a.im * b.im;
    mpz_class tim = a.im * b.re - a.re * b.im;
    GZ out;
    mpz_divexact(out.re.get_mpz_t(), tre.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(out.im.get_mpz_t(), tim.get_mpz_t(), n.get_mpz_t());
    return out;
}

GZ gz_pow(const GZ& base, int e) {
    GZ out{1, 0};
    for (int i = 0; i < e; ++i) out = gz_mul(out, base);
    return out;
}

using ZPoly = std::vector<GZ>;

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zp_from(const Polynomial& p) {
    mpz_class l(1);
    for (const GR& c : p.coeffs()) {
        l = lcm(l, c.re().get_den());
        l = lcm(l, c.im().get_den());
    }
    ZPoly out(p.coeffs().size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const GR& c = p.coeffs()[j];
        out[j] = {mpz_class(c.re().get_num() * (l / c.re().get_den())),
                  mpz_class(c.im().get_num() * (l / c.im().get_den()))};
    }
    zp_trim(out);
    return out;
}

// Strips the rational-integer content; enough to keep the remainder sequence
// primitive up to Gaussian units, which is all that matters for size.
void zp_primitive(ZPoly& p) {
    mpz_class g(0);
    for (const GZ& c : p) {
        g = gcd(g, c.re);
        g = gcd(g, c.im);
    }
    if (g <= 1) return;
    for (GZ& c : p) {
        mpz_divexact(c.re.get_mpz_t(), c.re.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(c.im.get_mpz_t(), c.im.get_mpz_t(), g.get_mpz_t());
    }
}

// Pseudo-remainder: the residue of lead(B)^(deg A - deg B + 1) * A modulo B.
// Exactly delta+1 scalings by lead(B) even when a degree step is vacuous, so
// the subresultant divisions downstream stay exact.
ZPoly zp_prem(const ZPoly& A, const ZPoly& B) {
    ZPoly R = A;
    const int dB = zp_deg(B);
    const GZ& lb = B.back();
    for (int e = zp_deg(A) - dB; e >= 0; --e) {
        GZ lr = (zp_deg(R) == dB + e) ? R.back() : GZ{0, 0};
        for (GZ& c : R) c = gz_mul(lb, c);
        if (!lr.is_zero())
            for (int i = 0; i <= dB; ++i) {
                GZ s = gz_mul(lr, B[i]);
                R[i + e].re -= s.re;
                R[i + e].im -= s.im;
            }
        zp_trim(R);
    }
    return R;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw PreconditionViolated("gcd(0, 0)");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::one();

    ZPoly A = zp_from(a), B = zp_from(b);
    zp_primitive(A);
    zp_primitive(B);
    if (zp_deg(A) < zp_deg(B)) std::swap(A, B);
    // Subresultant bookkeeping (Collins) over Z[i]: dividing each
    // pseudo-remainder by g*h^delta is exact and keeps coefficients near the
    // size of the answer.  Note the rational strip above cannot see complex
    // content, so the g/h divisions are what actually controls growth here.
    GZ g{1, 0}, h{1, 0};
    for (;;) {
        int delta = zp_deg(A) - zp_deg(B);
        ZPoly R = zp_prem(A, B);
        if (R.empty()) break;
        if (zp_deg(R) == 0) return Polynomial::one();
        GZ div = gz_mul(g, gz_pow(h, delta));
        for (GZ& c : R) c = gz_divexact(c, div);
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        if (delta > 0) h = gz_divexact(gz_pow(g, delta), gz_pow(h, delta - 1));
    }
    zp_primitive(B);
    std::vector<GR> coeffs(B.size());
    for (std::size_t j = 0; j < B.size(); ++j) coeffs[j] = GR(Rational(B[j].re), Rational(B[j].im));
    return Polynomial(std::move(coeffs)).monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    return poly_div_exact(a * b, poly_gcd(a, b)).monic();
}

ExtendedGcd poly_extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::one(), s1 = Polynomial::zero();
    Polynomial t0 = Polynomial::zero(), t1 = Polynomial::one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = std::exchange(r1, r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::exchange(s1, s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::exchange(t1, t2);
    }
    if (r0.is_zero()) throw PreconditionViolated("extended gcd of two zero polynomials");
    GR c = r0.lead().inverse();
    return {r0 * c, s0 * c, t0 * c};
}

std::vector<SquarefreeFactor> poly_squarefree(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionViolated("squarefree decomposition of 0");
    std::vector<SquarefreeFactor> out;
    Polynomial f = p.monic();
    if (f.is_constant()) return out;
    // Yun's algorithm (characteristic zero).
    Polynomial fp = f.derivative();
    Polynomial a = poly_gcd(f, fp);
    Polynomial b = poly_div_exact(f, a);
    Polynomial c = poly_div_exact(fp, a);
    Polynomial d = c - b.derivative();
    int i = 1;
    while (!(b.degree() <= 0)) {
        Polynomial g = poly_gcd(b, d);
        if (g.degree() > 0) out.push_back({g, i});
        b = poly_div_exact(b, g);
        c = poly_div_exact(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Polynomial poly_reverse(const Polynomial& p, int N, bool conjugate) {
    if (p.is_zero()) return Polynomial::zero();
    if (N < p.degree()) throw ReverseDegreeTooSmall();
    std::vector<GR> v(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= p.degree(); ++j) {
        GR c = p.coeff(j);
        v[N - j] = conjugate ? c.conj() : c;
    }
    return Polynomial(std::move(v));
}

int compare_for_ordering(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int j = a.degree(); j >= 0; --j)
        if (int c = compare_for_ordering(a.coeff(j), b.coeff(j)); c != 0) return c;
    return 0;
}

std::string to_string(const Polynomial& p, const char* var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int j = p.degree(); j >= 0; --j) {
        GR c = p.coeff(j);
        if (c.is_zero()) continue;
        bool negated = false;
        if (c.im() == 0 && c.re() < 0) {
            c = -c;
            negated = true;
        }
        out += out.empty() ? (negated ? "-" : "") : (negated ? " - " : " + ");
        std::string cs = to_string(c);
        bool composite = c.im() != 0 && c.re() != 0;
        if (j == 0) {
            out += cs;
        } else {
            if (!c.is_one()) out += (composite ? "(" + cs + ")" : cs) + "*";
            out += var;
            if (j > 1) out += "^" + std::to_string(j);
        }
    }
    return out;
}

}  // namespace whtk
