#pragma once

#include <optional>
#include <vector>

#include "whtk/ratfun.hpp"

namespace whtk {

/// Trichotomy of root location relative to the unit circle. 0 counts as
/// InsideDisk.
enum class RootLocus { InsideDisk, OnCircle, OutsideDisk };

const char* to_string(RootLocus locus);

/// Exact rational comparison of |root|^2 against 1.
RootLocus locate_linear(const GaussianRational& root);

/// Monic factor whose roots all share one locus; locus is empty for a
/// residual factor whose certification was deferred.
struct LocatedFactor {
    Polynomial factor;
    int multiplicity = 1;
    std::optional<RootLocus> locus;
};

struct FactoredPolynomial {
    GaussianRational constant;
    std::vector<LocatedFactor> factors;

    Polynomial expand() const;
};

/// Exact root counts by region, multiplicities included.
struct LocusCounts {
    int inside = 0;
    int on_circle = 0;
    int outside = 0;
};

/// Schur-Cohn inside-disk root count for a polynomial with no roots on the
/// unit circle. Throws SingularSchurCohn when the recursion degenerates.
int schur_cohn_inside_count(const Polynomial& p);

/// Exact (inside, on, outside) counts for any nonzero polynomial.
LocusCounts locus_counts(const Polynomial& p);

/// Common locus of all roots of a residual factor (squarefree, deg >= 1, no
/// root in Q(i)); MixedLocationFactor if the roots straddle regions.
RootLocus certify_locus(const Polynomial& p);

/// Splits p over Q(i): every Gaussian-rational root extracted as a linear
/// factor, residual factors certified where possible (deferred residuals
/// carry an empty locus). Deterministic factor order.
FactoredPolynomial factor_over_Qi(const Polynomial& p);

/// p = c * p_minus * p_circ * p_plus with monic factors whose roots lie in
/// D, on T, outside the closed disk respectively.
struct CircleSplit {
    GaussianRational constant;
    Polynomial inside;
    Polynomial circle;
    Polynomial outside;
};

CircleSplit split_by_circle(const Polynomial& p);

/// Step-1 splitting of 1/q: z^kappa * omega_minus * omega_circ * omega_plus
/// = 1/q with kappa = -deg q_minus.
struct QInverseSplit {
    int kappa = 0;
    RationalFunction omega_minus;
    RationalFunction omega_circ;
    RationalFunction omega_plus;
};

QInverseSplit split_q_inverse(const Polynomial& q);

}  // namespace whtk
