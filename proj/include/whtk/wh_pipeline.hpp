#pragma once

#include <utility>
#include <vector>

#include "whtk/circle_locus.hpp"
#include "whtk/ratmat.hpp"
#include "whtk/smith.hpp"
#include "whtk/triangular_split.hpp"

namespace whtk {

/// Omega = z^{-k} Omega_minus * diag(Omega_circ) * P0 * Omega_plus with
/// Omega_minus a minus unit, Omega_plus a plus unit, the Omega_circ entries
/// having zeroes and poles only on T, P0 lower triangular with z-power
/// diagonal and, when k > 0, P0(0) != 0.
struct WHFactorization {
    int k = 0;
    RatMat Omega_minus;
    std::vector<RationalFunction> Omega_circ;
    MatPoly P0;
    RatMat Omega_plus;

    RatMat product() const;
};

/// Every intermediate of the four-step construction; each step identity is
/// asserted during the run, so a populated trace is a machine-checked
/// derivation.
struct PipelineTrace {
    // Step 1: 1/q = z^kappa omega_minus omega_circ omega_plus
    Polynomial q;
    QInverseSplit split_q;

    // Step 2: P1 = E1 D1_minus D1_circ D1_plus F1
    MatPoly P1;
    MatPoly E1, F1;
    std::vector<Polynomial> D1_minus, D1_circ, D1_plus;

    // Step 3: P2 = z^N (E1 D1_minus D1_circ)(1/z), Smith of P2, and the
    // circle/zero resplit D2_circ(1/z) = D2_circ_tilde(z) D2_minus_tilde(1/z)
    int N = 0;
    MatPoly P2;
    MatPoly E2, F2;
    std::vector<Polynomial> D2_minus, D2_circ, D2_plus;
    std::vector<int> rho;                   // D2_minus = diag(z^rho_j)
    std::vector<Polynomial> D2_circ_tilde;  // monic, roots on T
    std::vector<int> eta;                   // D2_minus_tilde = diag(p_j(0) z^eta_j)
    std::vector<GR> p_at_zero;              // p_j(0)

    // Step 4: P3 = z^K D2_minus_tilde(1/z) D2_minus(1/z) F2(1/z) = Q3 F3
    int K = 0;
    MatPoly P3;
    TriangularSplit split3;
};

/// Four-step Wiener-Hopf-type factorization with the canonical z-power
/// normalization (k > 0 implies P0(0) != 0).
std::pair<WHFactorization, PipelineTrace> wh_factorize(const RatMatFun& om);

/// R and its inverse have poles only inside D and are finite at infinity.
bool is_minus_unit(const RatMat& R);
/// R and its inverse have no poles in the closed disk.
bool is_plus_unit(const RatMat& R);

struct WHVerification {
    bool product_equal = false;        // (a)
    bool minus_unit = false;           // (b)
    bool plus_unit = false;            // (c)
    bool circ_on_circle = false;       // (d) zeroes/poles of Omega_circ on T only
    bool p0_form = false;              // (e) triangular shape, degrees, k coupling
    bool circ_matches_smith = false;   // (f) q_circ * Omega_circ = regional Smith of P1
    bool polynomial_parts = false;     // (g) P_plus, P_minus, D_circ polynomial

    bool ok() const {
        return product_equal && minus_unit && plus_unit && circ_on_circle && p0_form &&
               circ_matches_smith && polynomial_parts;
    }
};

WHVerification verify_wh(const RatMatFun& om, const WHFactorization& fact);

/// 2x2 Bezout diagonalization for inputs of the lower triangular form
/// [[z^k1/q1, 0], [d/q2, z^k2/q2]] with q1 | q2, q2 with roots only on T
/// and deg d < k2: outer_minus * Xi * outer_plus = diag(middle).
struct Diag2x2 {
    RatMat outer_minus;
    std::vector<RationalFunction> middle;
    RatMat outer_plus;
};

Diag2x2 diagonalize_2x2(const RatMatFun& xi);

}  // namespace whtk
