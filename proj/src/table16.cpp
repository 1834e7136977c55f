#include "torsionscan/table16.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "torsionscan/errors.hpp"
#include "torsionscan/int_matrix.hpp"
#include "torsionscan/smith.hpp"
#include "torsionscan/sublattice.hpp"

namespace torsionscan {

namespace {

// adj(m) * m == det(m) * I; computed from cofactors, which is fine for the
// 4x4 matrices this file feeds it.
IntegerMatrix adjugate(const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    IntegerMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntegerMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc) = m(r, c);
                    ++mc;
                }
                ++mr;
            }
            Int cof = minor.determinant();
            if ((i + j) % 2 == 1) cof = -cof;
            adj(j, i) = cof;
        }
    }
    return adj;
}

} // namespace

LatticePolytope build_from_relations(const RelationSpec& spec, IntVector* aux_vector) {
    const std::size_t n = static_cast<std::size_t>(spec.num_vertices);
    if (n < 5) {
        throw relation_error("family " + std::to_string(spec.label) +
                             ": need at least 5 vertices to span a 4-dimensional polytope");
    }
    for (const IntVector& rel : spec.relations) {
        if (rel.size() != n) {
            throw relation_error("family " + std::to_string(spec.label) +
                                 ": relation length does not match the vertex count");
        }
    }
    if (spec.aux_numerators.size() != n || spec.aux_denominator < 1) {
        throw relation_error("family " + std::to_string(spec.label) +
                             ": malformed auxiliary vector");
    }

    IntegerMatrix relmat = spec.relations.empty()
                               ? IntegerMatrix(0, n)
                               : IntegerMatrix::from_rows(spec.relations);
    if (relmat.rank() != n - 4) {
        throw relation_error("family " + std::to_string(spec.label) +
                             ": relations do not cut the vertex span down to rank 4");
    }

    // Integer basis of the solution space; its transpose has the candidate
    // vertices as columns, expressed in an arbitrary rank-4 coordinate frame.
    IntegerMatrix coords = kernel_basis(relmat).transposed(); // 4 x n

    // Pick the first four linearly independent vertices and change frame so
    // they land on the standard basis (up to the common factor det below).
    std::vector<IntVector> chosen;
    std::size_t independent = 0;
    for (std::size_t j = 0; j < n && independent < 4; ++j) {
        chosen.push_back(coords.column(j));
        if (IntegerMatrix::from_columns(4, chosen).rank() == chosen.size()) {
            ++independent;
        } else {
            chosen.pop_back();
        }
    }
    if (independent < 4) {
        throw relation_error("family " + std::to_string(spec.label) +
                             ": vertices do not span a rank-4 space");
    }
    IntegerMatrix frame = IntegerMatrix::from_columns(4, chosen);
    const Int det = frame.determinant();
    // scaled[:,j] == det * v_j in the new frame
    IntegerMatrix scaled = adjugate(frame) * coords;

    // N is spanned by the vertices together with v = (1/m) sum b_j v_j.
    // Clearing denominators by m*det makes every generator integral.
    const Int m = spec.aux_denominator;
    std::vector<IntVector> generators;
    generators.reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        IntVector g = scaled.column(j);
        for (Int& x : g) x *= m;
        generators.push_back(std::move(g));
    }
    IntVector aux(4, Int(0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < 4; ++i) {
            aux[i] += spec.aux_numerators[j] * scaled(i, j);
        }
    }
    generators.push_back(aux);

    HermiteBasis basis = hermite_column_basis(IntegerMatrix::from_columns(4, generators));
    if (basis.basis.cols() != 4) {
        throw relation_error("family " + std::to_string(spec.label) +
                             ": vertex lattice is degenerate");
    }

    if (aux_vector != nullptr) {
        auto in_basis = lattice_coordinates(basis, aux);
        if (!in_basis) {
            throw internal_error("family " + std::to_string(spec.label) +
                                 ": the auxiliary vector fell outside its own lattice");
        }
        *aux_vector = std::move(*in_basis);
    }

    std::vector<IntVector> vertices;
    vertices.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntVector target = scaled.column(j);
        for (Int& x : target) x *= m;
        auto in_basis = lattice_coordinates(basis, target);
        if (!in_basis) {
            throw internal_error("family " + std::to_string(spec.label) +
                                 ": a vertex fell outside the lattice it generates");
        }
        vertices.push_back(std::move(*in_basis));
    }

    LatticePolytope polytope = LatticePolytope::from_points(4, vertices);
    if (polytope.vertices().size() != n) {
        throw relation_error("family " + std::to_string(spec.label) +
                             ": a listed vertex is redundant in the convex hull");
    }
    if (!polytope.is_reflexive()) {
        throw relation_error("family " + std::to_string(spec.label) +
                             ": the relations do not define a reflexive polytope");
    }
    return polytope;
}

const std::vector<RelationSpec>& table16_specs() {
    static const std::vector<RelationSpec> specs = {
        {1, 5, {{1, 1, 1, 1, 1}}, {0, 1, 2, 3, 4}, 5},
        {2, 6,
         {{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}},
         {0, 1, 2, 0, 1, 2}, 3},
        {3, 5, {{3, 3, 1, 1, 1}}, {1, 2, 1, 2, 0}, 3},
        {4, 5, {{4, 1, 1, 1, 1}}, {2, 1, 2, 3, 0}, 4},
        {5, 6,
         {{4, 2, 1, 1, 0, 0}, {2, 0, 0, 0, 1, 1}},
         {1, 1, 1, 0, 1, 0}, 2},
        {6, 7,
         {{2, 1, 1, 0, 0, 0, 0}, {2, 0, 0, 1, 1, 0, 0}, {2, 0, 0, 0, 0, 1, 1}},
         {1, 1, 0, 1, 0, 1, 0}, 2},
        {7, 5, {{8, 4, 2, 1, 1}}, {1, 1, 1, 1, 0}, 2},
        {8, 6,
         {{4, 2, 1, 1, 0, 0}, {4, 2, 0, 0, 1, 1}},
         {1, 1, 1, 0, 1, 0}, 2},
        {9, 6,
         {{1, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}},
         {0, 1, 2, 3, 0, 2}, 4},
        {10, 6,
         {{4, 2, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}},
         {1, 1, 1, 0, 1, 0}, 2},
        {11, 7,
         {{2, 1, 1, 0, 0, 0, 0}, {2, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 1}},
         {1, 1, 0, 1, 0, 1, 0}, 2},
        {12, 6,
         {{2, 1, 1, 0, 0, 0}, {0, 0, 0, 2, 1, 1}},
         {1, 1, 0, 1, 1, 0}, 2},
        {13, 7,
         {{2, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 1}},
         {1, 1, 0, 1, 0, 1, 0}, 2},
        {14, 8,
         {{1, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 1, 1, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, 1}},
         {1, 0, 1, 0, 1, 0, 1, 0}, 2},
        {15, 5, {{2, 2, 2, 1, 1}}, {1, 2, 3, 0, 2}, 4},
        {16, 6,
         {{1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1}},
         {1, 3, 0, 2, 0, 2}, 4},
    };
    return specs;
}

const std::vector<TableRowExpected>& table16_expected() {
    static const std::vector<TableRowExpected> rows = {
        // label pi1 | P_d V_d | P_d* V_d* | h11 h21 chi | 2v needed
        {1, 5, 26, 5, 6, 5, 1, 21, -40, false},
        {2, 3, 34, 9, 7, 6, 2, 29, -54, false},
        {3, 3, 49, 5, 7, 5, 2, 38, -72, false},
        {4, 2, 53, 5, 9, 5, 3, 43, -80, true},
        {5, 2, 77, 7, 9, 6, 3, 59, -112, false},
        {6, 2, 77, 9, 9, 7, 3, 59, -112, false},
        {7, 2, 101, 5, 9, 5, 3, 75, -144, false},
        {8, 2, 101, 6, 9, 6, 3, 75, -144, false},
        {9, 2, 29, 8, 9, 6, 4, 28, -48, true},
        {10, 2, 53, 8, 9, 6, 4, 44, -80, false},
        {11, 2, 53, 10, 9, 7, 4, 44, -80, false},
        {12, 2, 41, 9, 9, 6, 4, 36, -64, false},
        {13, 2, 41, 12, 9, 7, 4, 36, -64, false},
        {14, 2, 41, 16, 9, 8, 4, 36, -64, false},
        {15, 2, 29, 5, 9, 5, 5, 29, -48, true},
        {16, 2, 29, 6, 9, 6, 5, 29, -48, true},
    };
    return rows;
}

std::vector<MirrorPair> table16() {
    std::vector<MirrorPair> pairs;
    pairs.reserve(table16_specs().size());
    for (const RelationSpec& spec : table16_specs()) {
        LatticePolytope dstar = build_from_relations(spec);
        LatticePolytope delta = dstar.polar_dual();
        TorsionReport report = analyze(delta);
        TorsionReport mirror = analyze(dstar);
        pairs.push_back(MirrorPair{std::move(delta), std::move(dstar),
                                   std::move(report), std::move(mirror)});
    }
    return pairs;
}

CombDualEvidence verify_comb_dual(const LatticePolytope& delta) {
    if (delta.dim() != 4) {
        throw dimension_error("the torsion exchange is a 4-dimensional statement");
    }
    LatticePolytope dstar = delta.polar_dual();
    CombDualEvidence ev{
        wedge_square_quotient(4, codim_filtered_span(delta, 2)),
        quotient_group(codim_filtered_span(dstar, 1)),
        wedge_square_quotient(4, codim_filtered_span(dstar, 2)),
        quotient_group(codim_filtered_span(delta, 1)),
        false,
        false,
    };
    ev.first_matches = ev.wedge_delta == ev.pi1_dstar;
    ev.second_matches = ev.wedge_dstar == ev.pi1_delta;
    return ev;
}

bool verify_tor_dual(const MirrorPair& pair) {
    return pair.report.A == pair.mirror_report.B &&
           pair.report.B == pair.mirror_report.A;
}

} // namespace torsionscan
