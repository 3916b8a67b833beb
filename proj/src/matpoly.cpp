#include "whtk/matpoly.hpp"

#include "whtk/error.hpp"

namespace whtk {

MatPoly::MatPoly(int m, std::vector<Polynomial> entries) : m_(m), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(m) * m) throw SizeMismatch("entry grid is not m x m");
}

MatPoly MatPoly::identity(int m) {
    MatPoly a(m);
    for (int i = 0; i < m; ++i) a.at(i, i) = Polynomial::one();
    return a;
}

MatPoly MatPoly::diagonal(const std::vector<Polynomial>& diag) {
    MatPoly a(static_cast<int>(diag.size()));
    for (int i = 0; i < a.size(); ++i) a.at(i, i) = diag[i];
    return a;
}

bool MatPoly::is_identity() const { return *this == identity(m_); }

bool MatPoly::is_lower_triangular() const {
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

int MatPoly::degree() const {
    int d = Polynomial::kNegInfDegree;
    for (const auto& e : entries_) d = std::max(d, e.degree());
    return d;
}

std::vector<GaussianRational> MatPoly::eval_row(int i, const GaussianRational& x) const {
    std::vector<GR> row(m_);
    for (int j = 0; j < m_; ++j) row[j] = at(i, j).eval(x);
    return row;
}

std::vector<std::vector<GaussianRational>> MatPoly::eval(const GaussianRational& x) const {
    std::vector<std::vector<GR>> out(m_);
    for (int i = 0; i < m_; ++i) out[i] = eval_row(i, x);
    return out;
}

MatPoly MatPoly::reverse(int N) const {
    if (N < degree()) throw ReverseDegreeTooSmall();
    MatPoly out(m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            if (!at(i, j).is_zero()) out.at(i, j) = poly_reverse(at(i, j), N);
    return out;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
    if (a.m_ != b.m_) throw SizeMismatch();
    MatPoly c(a.m_);
    for (int i = 0; i < a.m_; ++i)
        for (int k = 0; k < a.m_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.m_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
    if (a.m_ != b.m_) throw SizeMismatch();
    MatPoly c(a.m_);
    for (int i = 0; i < a.m_; ++i)
        for (int j = 0; j < a.m_; ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

MatPoly MatPoly::operator*(const Polynomial& p) const {
    MatPoly c(m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) c.at(i, j) = at(i, j) * p;
    return c;
}

namespace {

Polynomial det_recursive(const MatPoly& a, std::vector<int>& cols, int row) {
    if (row == a.size()) return Polynomial::one();
    Polynomial acc;
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int col = cols[k];
        if (col >= 0) {
            if (!a.at(row, col).is_zero()) {
                cols[k] = -1;
                Polynomial sub = a.at(row, col) * det_recursive(a, cols, row + 1);
                cols[k] = col;
                acc += sign > 0 ? sub : -sub;
            }
            sign = -sign;
        }
    }
    return acc;
}

}  // namespace

Polynomial matpoly_det(const MatPoly& a) {
    std::vector<int> cols(a.size());
    for (int j = 0; j < a.size(); ++j) cols[j] = j;
    return det_recursive(a, cols, 0);
}

}  // namespace whtk
