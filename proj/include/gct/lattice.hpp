// Integer-lattice algorithms: Smith normal form, odd-denominator (Z_(2))
// feasibility of affine subspaces and polytopes, and the quasipolynomial
// index of a polytope's Ehrhart function.
#pragma once

#include "gct/polytope.hpp"
#include "gct/rational.hpp"

namespace gct {

// C = U * S * V with U, V unimodular and S diagonal (up to rectangularity)
// with nonnegative entries forming a divisibility chain.
struct SmithDecomposition {
    IntMat U;  // m x m
    IntMat S;  // m x d
    IntMat V;  // d x d
};

SmithDecomposition smith_normal_form(const IntMat& C);

// True iff {x : Cx = d} contains a point with all coordinates of odd
// denominator. C may be rectangular; it is padded square internally.
bool z2_feasible_affine(const IntMat& C, const IntVec& d);
bool z2_feasible_affine(const AffineSubspace& aff);

// True iff P contains a point of Z_(2)^d: rational feasibility combined
// with the affine-span test.
bool z2_feasible_polytope(const RationalPolytope& P);

// The index of the Ehrhart quasipolynomial of P, computed from the Smith
// form of the affine hull: lcm of the reduced diagonal coefficients.
Int quasipolynomial_index(const RationalPolytope& P);

// Under the caller's assertion that the Ehrhart quasipolynomial of P is
// saturated, integer feasibility coincides with rational feasibility.
bool decide_saturated_ip(const RationalPolytope& P, bool saturation_assumed);

}  // namespace gct
