#pragma once

#include <optional>

#include "whtk/circle_locus.hpp"
#include "whtk/matpoly.hpp"

namespace whtk {

/// Circle-relative region for the regional Smith form.
enum class Region { InsideDisk, OnCircle, OutsideDisk, WholePlane };

const char* to_string(Region region);

/// E * diag(D) * F = source, diagonal ordered so that d_{j+1} | d_j. For
/// the classical form det E and det F are nonzero constants; for a regional
/// form they are merely nonvanishing on the region.
struct SmithDecomposition {
    MatPoly E;
    std::vector<Polynomial> D;
    MatPoly F;
    std::optional<Region> region;  // empty = classical

    MatPoly product() const { return E * MatPoly::diagonal(D) * F; }
};

/// Classical Smith decomposition by elementary-operation reduction
/// (minimal-degree pivot, row-major tie break). Throws SingularMatrix when
/// det P is identically zero.
SmithDecomposition smith_decompose(const MatPoly& P);

/// Invariant factors computed independently as quotients of gcds of r x r
/// minors, in the same d_{j+1} | d_j ordering; oracle for smith_decompose.
std::vector<Polynomial> smith_invariants_via_minors(const MatPoly& P);

/// Smith form of P with respect to a circle-relative region: the off-region
/// parts of the classical diagonal are absorbed into F.
SmithDecomposition regional_smith(const MatPoly& P, Region region);

struct SmithVerification {
    bool product_equal = false;
    bool outer_admissible = false;  // det E, det F constant (classical) or region-free
    bool diagonal_monic = false;
    bool divisibility_chain = false;
    bool matches_minor_invariants = false;

    bool ok() const {
        return product_equal && outer_admissible && diagonal_monic && divisibility_chain &&
               matches_minor_invariants;
    }
};

SmithVerification verify_smith(const MatPoly& P, const SmithDecomposition& S);

/// Region membership of a root locus.
bool locus_in_region(RootLocus locus, Region region);

/// Splits a polynomial as (part with roots in the region) * (rest); both
/// monic, constant returned separately.
struct RegionSplit {
    GaussianRational constant;
    Polynomial in_region;
    Polynomial off_region;
};
RegionSplit split_by_region(const Polynomial& p, Region region);

}  // namespace whtk
