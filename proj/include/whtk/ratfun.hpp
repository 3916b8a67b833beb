#pragma once

#include "whtk/polynomial.hpp"

namespace whtk {

/// Scalar rational function in canonical form: num and den coprime, den
/// monic. 0 is represented as 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::one()) {}
    RationalFunction(Polynomial num, Polynomial den);  // normalizes
    explicit RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::one()) {}
    explicit RationalFunction(const GaussianRational& c)
        : num_(Polynomial::constant(c)), den_(Polynomial::one()) { if (num_.is_zero()) num_ = Polynomial::zero(); }

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(Polynomial::one()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction inverse() const;
    /// f(1/z) as a canonical rational function.
    RationalFunction subst_inv() const;
    /// Finite at infinity: deg num <= deg den.
    bool proper_at_infinity() const { return num_.degree() <= den_.degree(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    // Canonical form makes bitwise equality decide function equality.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    // num and den already coprime: skips the gcd, only normalizes den monic.
    static RationalFunction from_coprime(Polynomial num, Polynomial den);

    Polynomial num_, den_;
};

inline RationalFunction ratfun_normalize(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

std::string to_string(const RationalFunction& f, const char* var = "z");

}  // namespace whtk
