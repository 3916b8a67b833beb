#pragma once

#include <optional>
#include <vector>

#include "whtk/wh_pipeline.hpp"

namespace whtk {

/// Fredholmness and index of the Toeplitz-like operator attached to Omega,
/// read off a factorization z^{-k} Omega_minus diag(s_j/q_j) P0 Omega_plus:
/// the operator is Fredholm exactly when every numerator s_j is constant, and
/// in that case index = m*k + sum(deg q_j) - sum(n_j), where z^{n_j} are the
/// diagonal entries of P0.  The raw ingredients (k, deg q_j, n_j) are not
/// unique across factorizations; only the verdict and the index are.
struct FredholmReport {
    bool is_fredholm = false;
    std::optional<long> index;  // present exactly when Fredholm
    int m = 0;
    int k = 0;
    std::vector<int> q_degrees;
    std::vector<int> n_exponents;
    std::vector<Polynomial> witnesses;  // the nonconstant s_j when not Fredholm
};

/// Report from an existing factorization.  The structure this computation
/// relies on (circle factors with zeroes and poles on T only, lower
/// triangular P0 with z-power diagonal, k >= 0) is re-checked; violations
/// raise InvalidFactorization.  Checks against the original matrix function
/// are the caller's responsibility (see verify_wh).
FredholmReport fredholm_report(const WHFactorization& fact);

/// Convenience composition: wh_factorize, then fredholm_report.
FredholmReport fredholm_of(const RatMatFun& om);

}  // namespace whtk
