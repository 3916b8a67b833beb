#include "whtk/ratmat.hpp"

#include "whtk/error.hpp"

namespace whtk {
namespace {

// R = diag(row_den)^{-1} * M with M polynomial: clearing denominators row by
// row lets determinants and inverses run in polynomial arithmetic, with a
// single rational-function normalization per final entry instead of gcd-heavy
// rational-function arithmetic throughout.
struct ClearedRows {
    MatPoly M;
    std::vector<Polynomial> row_den;
};

ClearedRows clear_denominators(const RatMat& a) {
    int m = a.size();
    ClearedRows out{MatPoly(m), std::vector<Polynomial>(m)};
    for (int i = 0; i < m; ++i) {
        Polynomial l = Polynomial::one();
        for (int j = 0; j < m; ++j) l = poly_lcm(l, a.at(i, j).den());
        out.row_den[i] = l;
        for (int j = 0; j < m; ++j)
            if (!a.at(i, j).is_zero())
                out.M.at(i, j) = a.at(i, j).num() * poly_div_exact(l, a.at(i, j).den());
    }
    return out;
}

}  // namespace

RatMat::RatMat(const MatPoly& p) : RatMat(p.size()) {
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) at(i, j) = RationalFunction(p.at(i, j));
}

RatMat RatMat::identity(int m) {
    RatMat r(m);
    for (int i = 0; i < m; ++i) r.at(i, i) = RationalFunction::one();
    return r;
}

RatMat RatMat::diagonal(const std::vector<RationalFunction>& diag) {
    RatMat r(static_cast<int>(diag.size()));
    for (int i = 0; i < r.m_; ++i) r.at(i, i) = diag[i];
    return r;
}

bool RatMat::is_identity() const {
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

RatMat RatMat::subst_inv() const {
    RatMat r(m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) r.at(i, j) = at(i, j).subst_inv();
    return r;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.m_ != b.m_) throw SizeMismatch();
    RatMat r(a.m_);
    for (int i = 0; i < a.m_; ++i)
        for (int k = 0; k < a.m_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.m_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

RatMat RatMat::operator*(const RationalFunction& f) const {
    RatMat r(m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) r.at(i, j) = at(i, j) * f;
    return r;
}

RationalFunction ratmat_det(const RatMat& a) {
    ClearedRows c = clear_denominators(a);
    Polynomial num = matpoly_det(c.M);
    if (num.is_zero()) return RationalFunction::zero();
    Polynomial den = Polynomial::one();
    for (const Polynomial& l : c.row_den) den = den * l;
    return RationalFunction(std::move(num), std::move(den));
}

RatMat ratmat_inverse(const RatMat& a) {
    int m = a.size();
    ClearedRows c = clear_denominators(a);
    Polynomial det = matpoly_det(c.M);
    if (det.is_zero()) throw SingularMatrix("ratmat_inverse: determinant is identically zero");
    // a^{-1} = M^{-1} diag(row_den) = adj(M)/det(M) * diag(row_den).
    RatMat inv(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            MatPoly minor(m - 1);
            for (int r = 0, rr = 0; r < m; ++r) {
                if (r == j) continue;
                for (int col = 0, cc = 0; col < m; ++col) {
                    if (col == i) continue;
                    minor.at(rr, cc) = c.M.at(r, col);
                    ++cc;
                }
                ++rr;
            }
            Polynomial cof = m == 1 ? Polynomial::one() : matpoly_det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(i, j) = RationalFunction(cof * c.row_den[j], det);
        }
    return inv;
}

RatMat RatMatFun::omega() const {
    RatMat r(m);
    RationalFunction inv_q(Polynomial::one(), q);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r.at(i, j) = RationalFunction(P1.at(i, j)) * inv_q;
    return r;
}

RatMatFun ratmat_from_entries(const std::vector<std::vector<RationalFunction>>& entries) {
    int m = static_cast<int>(entries.size());
    if (m == 0) throw SizeMismatch("empty matrix");
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != m) throw SizeMismatch("matrix is not square");

    RatMatFun out;
    out.m = m;
    out.q = Polynomial::one();
    for (const auto& row : entries)
        for (const RationalFunction& e : row) out.q = poly_lcm(out.q, e.den());

    out.P1 = MatPoly(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.P1.at(i, j) = entries[i][j].num() * poly_div_exact(out.q, entries[i][j].den());
    if (matpoly_det(out.P1).is_zero())
        throw ZeroDeterminant("ratmat_from_entries: determinant is identically zero");
    return out;
}

}  // namespace whtk
