#include "whtk/triangular_split.hpp"

#include <optional>

#include "whtk/error.hpp"

namespace whtk {
namespace {

// Smallest k (1-based) such that rows[0..k-1] are linearly dependent,
// together with the alphas expressing row k-1 in the earlier rows:
// alpha_1 rows[0] + ... + alpha_{k-1} rows[k-2] + rows[k-1] = 0.
// Exact Gaussian elimination, first-nonzero pivoting.
struct Dependence {
    int k = 0;                // 1-based row count at first dependence
    std::vector<GR> alphas;   // size k-1
};

std::optional<Dependence> first_dependence(const std::vector<std::vector<GR>>& rows) {
    int m = static_cast<int>(rows.size());
    struct Reduced {
        int pivot;
        std::vector<GR> row;
        std::vector<GR> comb;  // row = sum comb[i] * rows[i]
    };
    std::vector<Reduced> basis;
    for (int k = 0; k < m; ++k) {
        std::vector<GR> v = rows[k];
        std::vector<GR> comb(k + 1);
        comb[k] = GR(1);
        for (const Reduced& b : basis) {
            if (v[b.pivot].is_zero()) continue;
            GR f = v[b.pivot] / b.row[b.pivot];
            for (int j = 0; j < m; ++j) v[j] = v[j] - f * b.row[j];
            for (std::size_t i = 0; i < b.comb.size(); ++i) comb[i] = comb[i] - f * b.comb[i];
        }
        int pivot = -1;
        for (int j = 0; j < m; ++j)
            if (!v[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot < 0) {
            Dependence d;
            d.k = k + 1;
            d.alphas.assign(comb.begin(), comb.begin() + k);
            return d;
        }
        basis.push_back({pivot, std::move(v), std::move(comb)});
    }
    return std::nullopt;
}

// Largest power of z dividing every entry of row i; strips it in place.
int strip_row_power(MatPoly& R, int i) {
    int m = R.size();
    int order = -1;
    for (int j = 0; j < m; ++j) {
        const Polynomial& e = R.at(i, j);
        if (e.is_zero()) continue;
        int o = e.order_at_zero();
        if (order < 0 || o < order) order = o;
    }
    if (order <= 0) return 0;
    for (int j = 0; j < m; ++j)
        if (!R.at(i, j).is_zero()) R.at(i, j) = R.at(i, j).shift_down(order);
    return order;
}

}  // namespace

TriangularSplit qr_split_at_zero(const MatPoly& F) {
    int m = F.size();
    if (matpoly_det(F).is_zero()) throw SingularMatrix("qr_split_at_zero: det F is identically zero");

    TriangularSplit out;
    out.Q = MatPoly::identity(m);
    out.R = F;
    out.n_exponents.assign(m, 0);

    // Part 1: pull the maximal z-power out of each row.
    for (int i = 0; i < m; ++i) {
        int ni = strip_row_power(out.R, i);
        out.n_exponents[i] += ni;
        out.Q.at(i, i) = Polynomial::monomial(out.n_exponents[i]);
    }
    out.q_steps.push_back(out.Q);

    // Parts 2 and 3: while R(0) is singular, cancel the first dependent row
    // and absorb the freed z-power into Q.
    while (true) {
        auto dep = first_dependence(out.R.eval(GR(0)));
        if (!dep) break;
        int k = dep->k - 1;  // 0-based row index being replaced

        // row_k <- sum alpha_i row_i + row_k, then strip z^l from it
        for (int j = 0; j < m; ++j) {
            Polynomial acc = out.R.at(k, j);
            for (int i = 0; i < k; ++i) acc += dep->alphas[i] * out.R.at(i, j);
            out.R.at(k, j) = std::move(acc);
        }
        int ell = strip_row_power(out.R, k);
        if (ell <= 0) throw PreconditionViolated("qr_split_at_zero: cancelled row gained no z-power");
        out.n_exponents[k] += ell;

        // Q <- Q * L^{-1} * diag(1,...,z^l,...,1): column ops on Q.
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < m; ++i)
                out.Q.at(i, j) -= dep->alphas[j] * out.Q.at(i, k);
        Polynomial zl = Polynomial::monomial(ell);
        for (int i = 0; i < m; ++i) out.Q.at(i, k) *= zl;
        out.q_steps.push_back(out.Q);
    }
    return out;
}

TriangularSplitVerification verify_triangular_split(const MatPoly& F, const TriangularSplit& S) {
    TriangularSplitVerification v;
    int m = F.size();
    if (S.Q.size() != m || S.R.size() != m || static_cast<int>(S.n_exponents.size()) != m) return v;

    v.product_equal = (S.Q * S.R == F);
    v.lower_triangular = S.Q.is_lower_triangular();

    v.diagonal_powers = true;
    for (int j = 0; j < m; ++j)
        if (S.n_exponents[j] < 0 || S.Q.at(j, j) != Polynomial::monomial(S.n_exponents[j]))
            v.diagonal_powers = false;

    v.degree_bounds = true;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (!S.Q.at(i, j).is_zero() && S.Q.at(i, j).degree() >= S.n_exponents[i])
                v.degree_bounds = false;

    Polynomial det = matpoly_det(F);
    int n = det.is_zero() ? -1 : det.order_at_zero();
    int sum = 0;
    for (int nj : S.n_exponents) sum += nj;
    v.exponent_sum = (n >= 0 && sum == n);

    Polynomial detR = matpoly_det(S.R);
    v.residual_nonsingular = !detR.is_zero() && !detR.coeff(0).is_zero();
    return v;
}

}  // namespace whtk
