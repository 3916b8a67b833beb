#include "whtk/ratfun.hpp"

namespace whtk {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    GR c = den_.lead().inverse();
    num_ = num_ * c;
    den_ = den_ * c;
}

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) {
        r.den_ = Polynomial::one();
        return r;
    }
    if (!r.den_.is_monic()) {
        GR c = r.den_.lead().inverse();
        r.num_ = r.num_ * c;
        r.den_ = r.den_ * c;
    }
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return from_coprime(den_, num_);
}

RationalFunction RationalFunction::subst_inv() const {
    if (is_zero()) return zero();
    int dn = num_.degree(), dd = den_.degree();
    int d = std::max(dn, dd);
    // f(1/z) = z^{d-dn} rev(num) / (z^{d-dd} rev(den)); the reversals stay
    // coprime, so only the z-power introduced by the shifts can cancel.
    Polynomial n = poly_reverse(num_, dn).shift_up(d - dn);
    Polynomial dn2 = poly_reverse(den_, dd).shift_up(d - dd);
    int t = std::min(n.order_at_zero(), dn2.order_at_zero());
    return from_coprime(n.shift_down(t), dn2.shift_down(t));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // With coprime operands any factor common to the sum and the joint
    // denominator divides g = gcd of the denominators: one small gcd instead
    // of a gcd of full products.
    Polynomial g = poly_gcd(a.den_, b.den_);
    Polynomial da = poly_div_exact(a.den_, g), db = poly_div_exact(b.den_, g);
    Polynomial n = a.num_ * db + b.num_ * da;
    if (n.is_zero()) return RationalFunction::zero();
    Polynomial d = a.den_ * db;
    Polynomial g2 = poly_gcd(n, g);
    if (g2.degree() > 0) {
        n = poly_div_exact(n, g2);
        d = poly_div_exact(d, g2);
    }
    return RationalFunction::from_coprime(std::move(n), std::move(d));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction::zero();
    // Cross-cancellation: canonical operands leave nothing else to reduce.
    Polynomial g1 = poly_gcd(a.num_, b.den_);
    Polynomial g2 = poly_gcd(b.num_, a.den_);
    Polynomial n = poly_div_exact(a.num_, g1) * poly_div_exact(b.num_, g2);
    Polynomial d = poly_div_exact(a.den_, g2) * poly_div_exact(b.den_, g1);
    return RationalFunction::from_coprime(std::move(n), std::move(d));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return a * b.inverse();
}

std::string to_string(const RationalFunction& f, const char* var) {
    if (f.is_polynomial()) return to_string(f.num(), var);
    std::string n = to_string(f.num(), var);
    std::string d = to_string(f.den(), var);
    if (f.num().degree() > 0 || f.num().coeffs().size() > 1) n = "(" + n + ")";
    return n + "/(" + d + ")";
}

}  // namespace whtk
