#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torsionscan/int_matrix.hpp"

namespace torsionscan {

// Smith normal form with transforms: U * A * V = D. The pivot is always a
// nonzero entry of minimal absolute value in the remaining block, first
// occurrence in row-major order on ties, so the output is a pure function
// of the input.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Basis of the integer kernel {x : A x = 0}; columns of the result. The
// basis is saturated (columns of a unimodular matrix), so a rank-one kernel
// basis vector is automatically primitive.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

// Column-style Hermite normal form of the column span. `basis` holds one
// column per pivot; pivot entries are positive, sit in strictly increasing
// rows, and every entry left of a pivot in its row is reduced into
// [0, pivot). This is the unique such basis of the sublattice, so two spans
// coincide iff their HermiteBasis matrices are equal.
struct HermiteBasis {
    IntegerMatrix basis;                  // ambient_rank x rank
    std::vector<std::size_t> pivot_rows;  // row of each column's pivot
};

HermiteBasis hermite_column_basis(const IntegerMatrix& generators);

// Integer coordinates of x in the given Hermite basis, or nullopt when x is
// not in the spanned sublattice.
std::optional<IntVector> lattice_coordinates(const HermiteBasis& basis, const IntVector& x);

inline bool lattice_contains(const HermiteBasis& basis, const IntVector& x)
{
    return lattice_coordinates(basis, x).has_value();
}

} // namespace torsionscan
