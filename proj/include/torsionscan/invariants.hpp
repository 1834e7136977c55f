#pragma once

#include <utility>

#include "torsionscan/abelian_group.hpp"
#include "torsionscan/polytope.hpp"
#include "torsionscan/sublattice.hpp"

namespace torsionscan {

// Invariants of the Calabi-Yau hypersurface family attached to a reflexive
// 4-dimensional polytope Delta (with polar dual Dstar in the lattice N).
struct TorsionReport {
    FiniteAbelianGroup pi1;    // N / N', N' spanned by dual points off the facet interiors
    FiniteAbelianGroup brauer; // Hom(Lambda^2 N / N^N'', Q/Z), same invariants as the quotient
    FiniteAbelianGroup A;      // = pi1; finite groups are isomorphic to their duals
    FiniteAbelianGroup B;      // = brauer
    long long h11 = 0;
    long long h21 = 0;
    long long chi = 0; // 2 * (h11 - h21)
    long long p_delta = 0;
    long long v_delta = 0;
    long long p_dstar = 0;
    long long v_dstar = 0;
    // Torsion orders of the K-groups: both equal |A| * |B|. Only the order
    // is determined here; the group extension is not.
    Int tors_k0_order = 1;
    Int tors_k1_order = 1;
};

// Lattice points of the reflexive polytope `dstar` lying on faces of
// codimension > k, i.e. of dimension <= dim - k - 1, as a sublattice span.
// The origin (interior) never qualifies. Requires 1 <= k < dim.
SublatticeSpan codim_filtered_span(const LatticePolytope& dstar, int k);

// N / N' for the dual polytope `dstar` in N; cyclic by theorem when dim == 4
// (violation raises internal_error). dim >= 3 required; for dim >= 5 the
// result is only a candidate for the stringy fundamental group.
FiniteAbelianGroup fundamental_group(const LatticePolytope& dstar);

// Same group through the exterior-power presentation: each generator v of
// N' contributes the top wedge of a basis of the rank-(d-1) kernel lattice
// {x : <x, v> = 0}, and the torsion of the cokernel in Lambda^(d-1) M is
// returned. Shares no geometry with fundamental_group beyond the point
// filter, so agreement is a real cross-check.
FiniteAbelianGroup fundamental_group_via_exterior(const LatticePolytope& dstar);

// Lambda^2 N / (N ^ N'') for dim == 4 only. Internally asserted to be
// cyclic of order c_3, the third invariant of N / N''.
FiniteAbelianGroup brauer_group(const LatticePolytope& dstar);

// Brauer group of the smooth toric variety with the given primitive fan
// rays: the direct sum of Z/c_i over pairs i < j, where c_1 | ... | c_d is
// the positional chain of Z^d / <rays>.
FiniteAbelianGroup demeyer_ford_brauer(const SublatticeSpan& rays);

// Stringy Hodge numbers (h11, h21) of the family for a reflexive dual pair
// in dimension 4.
std::pair<long long, long long> stringy_hodge(const LatticePolytope& delta,
                                              const LatticePolytope& dstar);

// Full report for a reflexive 4-polytope Delta.
TorsionReport analyze(const LatticePolytope& delta);

} // namespace torsionscan
