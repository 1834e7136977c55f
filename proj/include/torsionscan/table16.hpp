#pragma once

#include <vector>

#include "torsionscan/invariants.hpp"
#include "torsionscan/polytope.hpp"

namespace torsionscan {

// One family given by linear relations among abstract vertices v_1..v_n
// plus an auxiliary lattice vector v = (1/denominator) * sum(numerators_i *
// v_i) that enlarges the vertex span to the full lattice N.
struct RelationSpec {
    int label = 0;
    int num_vertices = 0;
    std::vector<IntVector> relations; // each of length num_vertices, must cut the span to rank 4
    IntVector aux_numerators;         // length num_vertices
    Int aux_denominator = 1;
};

// Realizes the relation table as a lattice polytope: vertices are embedded in Q^4
// with the first four independent ones on the standard basis, N is spanned
// by them together with the auxiliary vector, and everything is rewritten
// in the Hermite basis of N. The result must come out reflexive. When
// aux_vector is non-null it receives the auxiliary vector in the same
// coordinates as the returned polytope.
LatticePolytope build_from_relations(const RelationSpec& spec,
                                     IntVector* aux_vector = nullptr);

// Expected values for one catalogue row, used to pin the computation down.
struct TableRowExpected {
    int label;
    long long pi1_order;
    long long p_delta, v_delta, p_dstar, v_dstar;
    long long h11, h21, chi;
    bool span_needs_2v; // the boundary span needs 2v on top of the vertices
};

// the sixteen families with torsion fundamental group
const std::vector<RelationSpec>& table16_specs();
const std::vector<TableRowExpected>& table16_expected();

struct MirrorPair {
    LatticePolytope delta;
    LatticePolytope dstar;
    TorsionReport report;        // family attached to delta
    TorsionReport mirror_report; // family attached to dstar
};

// all sixteen rows, fully analyzed on both sides
std::vector<MirrorPair> table16();

// Both directions of the combinatorial exchange for one reflexive dual
// pair: the exterior-square quotient on each side against the boundary
// quotient on the other.
struct CombDualEvidence {
    FiniteAbelianGroup wedge_delta; // Lambda^2 M / (M ^ M'')
    FiniteAbelianGroup pi1_dstar;   // N / N'
    FiniteAbelianGroup wedge_dstar; // Lambda^2 N / (N ^ N'')
    FiniteAbelianGroup pi1_delta;   // M / M'
    bool first_matches = false;     // wedge_delta == pi1_dstar
    bool second_matches = false;    // wedge_dstar == pi1_delta
    bool ok() const { return first_matches && second_matches; }
};

CombDualEvidence verify_comb_dual(const LatticePolytope& delta);

// A(X) == B(X*) and B(X) == A(X*) for the analyzed pair
bool verify_tor_dual(const MirrorPair& pair);

} // namespace torsionscan
