#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "whtk/gaussian.hpp"

namespace whtk {

/// Dense univariate polynomial over Q(i); coeffs[j] is the coefficient of
/// z^j. The zero polynomial is the empty list and its degree is the
/// sentinel kNegInfDegree, smaller than any real degree.
class Polynomial {
public:
    static constexpr int kNegInfDegree = -0x40000000;

    Polynomial() = default;
    Polynomial(std::initializer_list<GaussianRational> coeffs)
        : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<GaussianRational> coeffs)
        : coeffs_(std::move(coeffs)) { trim(); }
    explicit Polynomial(const GaussianRational& c) : coeffs_{c} { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(1); }
    static Polynomial constant(GaussianRational c) { return Polynomial(std::vector<GR>{std::move(c)}); }
    /// c * z^k
    static Polynomial monomial(int k, GaussianRational c = 1);
    static Polynomial z() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !is_zero() && lead().is_one(); }

    int degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    GaussianRational coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(coeffs_.size())) ? coeffs_[j] : GR(0);
    }
    const GaussianRational& lead() const { return coeffs_.back(); }

    GaussianRational eval(const GaussianRational& x) const;
    GaussianRational at_zero() const { return coeff(0); }

    Polynomial derivative() const;
    Polynomial conjugate_coeffs() const;
    Polynomial monic() const;
    /// Multiplicity of the root 0 (0 if p(0) != 0); p must be nonzero.
    int order_at_zero() const;
    /// p / z^k, requires z^k | p.
    Polynomial shift_down(int k) const;
    Polynomial shift_up(int k) const { return *this * monomial(k); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const GaussianRational& c);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& a) { return a * c; }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int e) const;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

struct DivRem {
    Polynomial quot;
    Polynomial rem;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZero if b == 0.
DivRem poly_divrem(const Polynomial& a, const Polynomial& b);
/// Exact division; throws PreconditionViolated when the remainder is nonzero.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0,0) is an error.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

/// g = a*s + b*t with g = gcd(a,b) monic.
struct ExtendedGcd {
    Polynomial g, s, t;
};
ExtendedGcd poly_extended_gcd(const Polynomial& a, const Polynomial& b);

/// Squarefree decomposition p = c * prod f_i^{m_i} (Yun), f_i monic,
/// squarefree, pairwise coprime; c is the leading coefficient of p.
struct SquarefreeFactor {
    Polynomial factor;
    int multiplicity;
};
std::vector<SquarefreeFactor> poly_squarefree(const Polynomial& p);

/// z^N * p(1/z); requires N >= deg p. With conjugate set, coefficients are
/// conjugated first (used for on-circle root detection).
Polynomial poly_reverse(const Polynomial& p, int N, bool conjugate = false);

int compare_for_ordering(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p, const char* var = "z");

}  // namespace whtk
