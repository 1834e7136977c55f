#pragma once

#include <cstddef>
#include <vector>

#include "torsionscan/abelian_group.hpp"
#include "torsionscan/int_matrix.hpp"
#include "torsionscan/smith.hpp"

namespace torsionscan {

// A sublattice of Z^ambient_rank given by an explicit generating set. The
// generator list may be empty (the zero sublattice) or redundant.
struct SublatticeSpan {
    std::size_t ambient_rank = 0;
    std::vector<IntVector> generators;
};

// generators as columns of an ambient_rank x n matrix
IntegerMatrix generator_matrix(const SublatticeSpan& span);

// Z^d / <generators>; invariant factors (1s dropped) plus free rank
FiniteAbelianGroup quotient_group(const SublatticeSpan& span);

// Full positional chain c_1 | c_2 | ... | c_d of Z^d / <generators>: 1s are
// kept in place and missing rank shows up as trailing zeros. This is the
// form the pairwise Brauer formula consumes.
std::vector<Int> quotient_chain(const SublatticeSpan& span);

// Unique Hermite basis of the spanned sublattice; d x 0 for the zero span.
IntegerMatrix lattice_basis(const SublatticeSpan& span);

// Same sublattice of the same ambient lattice?
bool spans_same_lattice(const SublatticeSpan& a, const SublatticeSpan& b);

// Quotient of the exterior square: Lambda^2 Z^d / <b ^ g> over all standard
// basis vectors b and generators g. Ambient rank of the result is d(d-1)/2
// with basis e_i ^ e_j, i < j, in lexicographic order.
FiniteAbelianGroup wedge_square_quotient(std::size_t d, const SublatticeSpan& span);

// Closed form for the same quotient from the chain of Z^d / <generators>:
// the direct sum of Z/c_i over all pairs i < j (so c_i occurs d - i times).
FiniteAbelianGroup wedge_square_closed_form(const std::vector<Int>& chain);

} // namespace torsionscan
