#pragma once

#include <vector>

#include "whtk/matpoly.hpp"
#include "whtk/ratfun.hpp"

namespace whtk {

/// Square matrix of rational functions, row-major. Entries stay in
/// canonical form, so operator== decides function equality.
class RatMat {
public:
    RatMat() : m_(0) {}
    explicit RatMat(int m) : m_(m), entries_(static_cast<std::size_t>(m) * m) {}
    explicit RatMat(const MatPoly& p);

    static RatMat identity(int m);
    static RatMat diagonal(const std::vector<RationalFunction>& diag);

    int size() const { return m_; }
    RationalFunction& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * m_ + j]; }
    const RationalFunction& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * m_ + j];
    }

    bool is_identity() const;
    /// Entrywise substitution z -> 1/z.
    RatMat subst_inv() const;

    friend RatMat operator*(const RatMat& a, const RatMat& b);
    RatMat operator*(const RationalFunction& f) const;
    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.m_ == b.m_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

private:
    int m_;
    std::vector<RationalFunction> entries_;
};

/// Determinant by cofactor expansion.
RationalFunction ratmat_det(const RatMat& a);

/// Inverse via adjugate over the fraction field. Throws SingularMatrix when
/// the determinant is identically zero.
RatMat ratmat_inverse(const RatMat& a);

/// Omega = P1 / q with q the monic lcm of all entry denominators; the gcd
/// of q with the entries of P1 is 1 by construction.
struct RatMatFun {
    MatPoly P1;
    Polynomial q;
    int m = 0;

    RatMat omega() const;
};

/// Builds the P1/q representation. Throws ZeroDeterminant when det of the
/// input is identically zero.
RatMatFun ratmat_from_entries(const std::vector<std::vector<RationalFunction>>& entries);

}  // namespace whtk
