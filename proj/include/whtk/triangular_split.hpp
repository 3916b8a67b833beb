#pragma once

#include <vector>

#include "whtk/matpoly.hpp"

namespace whtk {

/// F = Q * R with Q lower triangular, det Q = z^n (z^{n_j} on the j-th
/// diagonal entry) and det R(0) != 0. Off-diagonal entries of Q have degree
/// below the diagonal exponent of their row, which pins Q and R uniquely.
struct TriangularSplit {
    MatPoly Q;
    MatPoly R;
    std::vector<int> n_exponents;
    /// Q after the initial row-power extraction and after each cancellation
    /// step; the last entry equals Q.
    std::vector<MatPoly> q_steps;
};

/// Splits off the full z-power content of det F at the origin. Throws
/// SingularMatrix when det F is identically zero.
TriangularSplit qr_split_at_zero(const MatPoly& F);

struct TriangularSplitVerification {
    bool product_equal = false;
    bool lower_triangular = false;
    bool diagonal_powers = false;      // j-th diagonal entry is z^{n_j}
    bool degree_bounds = false;        // deg q_{i,j} < n_i for i > j
    bool exponent_sum = false;         // sum n_j = order of det F at 0
    bool residual_nonsingular = false; // det R(0) != 0

    bool ok() const {
        return product_equal && lower_triangular && diagonal_powers && degree_bounds &&
               exponent_sum && residual_nonsingular;
    }
};

TriangularSplitVerification verify_triangular_split(const MatPoly& F, const TriangularSplit& S);

}  // namespace whtk
