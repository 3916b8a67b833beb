#pragma once

#include <vector>

#include "whtk/polynomial.hpp"

namespace whtk {

/// Square matrix of polynomials over Q(i), row-major.
class MatPoly {
public:
    MatPoly() : m_(0) {}
    explicit MatPoly(int m) : m_(m), entries_(static_cast<std::size_t>(m) * m) {}
    MatPoly(int m, std::vector<Polynomial> entries);

    static MatPoly identity(int m);
    static MatPoly diagonal(const std::vector<Polynomial>& diag);

    int size() const { return m_; }
    Polynomial& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * m_ + j]; }
    const Polynomial& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * m_ + j]; }

    bool is_identity() const;
    bool is_lower_triangular() const;
    /// Max entry degree; kNegInfDegree for the zero matrix.
    int degree() const;

    std::vector<GaussianRational> eval_row(int i, const GaussianRational& x) const;
    std::vector<std::vector<GaussianRational>> eval(const GaussianRational& x) const;

    /// z^N * A(1/z) entrywise; requires N >= degree().
    MatPoly reverse(int N) const;

    friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator+(const MatPoly& a, const MatPoly& b);
    MatPoly operator*(const Polynomial& p) const;
    friend bool operator==(const MatPoly& a, const MatPoly& b) { return a.m_ == b.m_ && a.entries_ == b.entries_; }
    friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }

private:
    int m_;
    std::vector<Polynomial> entries_;
};

/// Determinant by cofactor expansion; sizes are desk scale (m <= ~6).
Polynomial matpoly_det(const MatPoly& a);

inline MatPoly matpoly_mul(const MatPoly& a, const MatPoly& b) { return a * b; }

}  // namespace whtk
