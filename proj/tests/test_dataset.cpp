#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "torsionscan/errors.hpp"
#include "torsionscan/invariants.hpp"
#include "torsionscan/sublattice.hpp"
#include "torsionscan/table16.hpp"

using namespace torsionscan;

namespace {

// built once; every test case below reads from the same analyzed pairs
const std::vector<MirrorPair>& pairs() {
    static const std::vector<MirrorPair> p = table16();
    return p;
}

} // namespace

TEST_CASE("catalogue matches the expected invariants row by row") {
    const auto& expected = table16_expected();
    REQUIRE(pairs().size() == 16);
    REQUIRE(expected.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) {
        const MirrorPair& mp = pairs()[i];
        const TableRowExpected& row = expected[i];
        CAPTURE(row.label);

        CHECK(mp.report.pi1.is_cyclic());
        CHECK(mp.report.pi1.order() == row.pi1_order);
        CHECK(mp.report.A == mp.report.pi1);

        CHECK(mp.report.p_delta == row.p_delta);
        CHECK(mp.report.v_delta == row.v_delta);
        CHECK(mp.report.p_dstar == row.p_dstar);
        CHECK(mp.report.v_dstar == row.v_dstar);

        CHECK(mp.report.h11 == row.h11);
        CHECK(mp.report.h21 == row.h21);
        CHECK(mp.report.chi == row.chi);
        CHECK(mp.report.chi == 2 * (row.h11 - row.h21));
    }
}

TEST_CASE("mirror reports swap the point counts and Hodge numbers") {
    for (std::size_t i = 0; i < pairs().size(); ++i) {
        const MirrorPair& mp = pairs()[i];
        CAPTURE(table16_expected()[i].label);
        CHECK(mp.mirror_report.p_delta == mp.report.p_dstar);
        CHECK(mp.mirror_report.v_delta == mp.report.v_dstar);
        CHECK(mp.mirror_report.p_dstar == mp.report.p_delta);
        CHECK(mp.mirror_report.v_dstar == mp.report.v_delta);
        CHECK(mp.mirror_report.h11 == mp.report.h21);
        CHECK(mp.mirror_report.h21 == mp.report.h11);
        CHECK(mp.mirror_report.chi == -mp.report.chi);
    }
}

TEST_CASE("fundamental groups across the catalogue: one Z/5, two Z/3, thirteen Z/2") {
    std::map<long long, int> histogram;
    for (const MirrorPair& mp : pairs()) {
        REQUIRE(mp.report.pi1.is_cyclic());
        histogram[static_cast<long long>(mp.report.pi1.order())]++;
    }
    CHECK(histogram == std::map<long long, int>{{2, 13}, {3, 2}, {5, 1}});
}

TEST_CASE("fundamental group and Brauer group trade places under mirror duality") {
    for (std::size_t i = 0; i < pairs().size(); ++i) {
        const MirrorPair& mp = pairs()[i];
        CAPTURE(table16_expected()[i].label);
        CHECK(verify_tor_dual(mp));
        // the mirror family carries the torsion in its Brauer group instead
        CHECK(mp.mirror_report.B == mp.report.A);
        CHECK(mp.mirror_report.A == mp.report.B);
    }
    // spelled out for the quintic-quotient row, the smallest of the sixteen
    const MirrorPair& first = pairs().front();
    CHECK(first.report.A == FiniteAbelianGroup::cyclic(5));
    CHECK(first.report.B.is_trivial());
    CHECK(first.mirror_report.A.is_trivial());
    CHECK(first.mirror_report.B == FiniteAbelianGroup::cyclic(5));
}

TEST_CASE("lattice-level exchange holds on every catalogue polytope and its dual") {
    for (std::size_t i = 0; i < pairs().size(); ++i) {
        const MirrorPair& mp = pairs()[i];
        CAPTURE(table16_expected()[i].label);
        CombDualEvidence forward = verify_comb_dual(mp.delta);
        CHECK(forward.ok());
        CombDualEvidence backward = verify_comb_dual(mp.dstar);
        CHECK(backward.ok());
        // the two runs see the same four groups, swapped in pairs
        CHECK(forward.wedge_delta == backward.wedge_dstar);
        CHECK(forward.pi1_delta == backward.pi1_dstar);
    }
}

TEST_CASE("exterior-power route agrees with the quotient route on all 32 polytopes") {
    for (std::size_t i = 0; i < pairs().size(); ++i) {
        const MirrorPair& mp = pairs()[i];
        CAPTURE(table16_expected()[i].label);
        CHECK(fundamental_group(mp.dstar) == fundamental_group_via_exterior(mp.dstar));
        CHECK(fundamental_group(mp.delta) == fundamental_group_via_exterior(mp.delta));
    }
}

TEST_CASE("vertex span has index exactly the auxiliary denominator") {
    const auto& specs = table16_specs();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CAPTURE(specs[i].label);
        const LatticePolytope& dstar = pairs()[i].dstar;
        FiniteAbelianGroup by_vertices =
            quotient_group(SublatticeSpan{4, dstar.vertices()});
        CHECK(by_vertices == FiniteAbelianGroup::cyclic(specs[i].aux_denominator));
    }
}

TEST_CASE("boundary span needs 2v exactly where recorded") {
    const auto& specs = table16_specs();
    const auto& expected = table16_expected();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CAPTURE(specs[i].label);
        IntVector v;
        LatticePolytope dstar = build_from_relations(specs[i], &v);
        SublatticeSpan boundary = codim_filtered_span(dstar, 1);

        SublatticeSpan just_vertices{4, dstar.vertices()};
        std::vector<IntVector> with_2v = dstar.vertices();
        IntVector doubled = v;
        for (Int& x : doubled) x *= 2;
        with_2v.push_back(doubled);
        SublatticeSpan vertices_and_2v{4, with_2v};

        if (expected[i].span_needs_2v) {
            CHECK(spans_same_lattice(boundary, vertices_and_2v));
            CHECK_FALSE(spans_same_lattice(boundary, just_vertices));
        } else {
            CHECK(spans_same_lattice(boundary, just_vertices));
        }
    }
}

TEST_CASE("building a family is deterministic") {
    LatticePolytope a = build_from_relations(table16_specs()[0]);
    LatticePolytope b = build_from_relations(table16_specs()[0]);
    CHECK(a == b);
    CHECK(a.vertices() == b.vertices());
}

TEST_CASE("malformed relation specs are rejected") {
    SUBCASE("relations of deficient rank") {
        RelationSpec spec{99, 6, {{1, 1, 1, 1, 1, 1}}, {0, 0, 0, 0, 0, 1}, 2};
        CHECK_THROWS_AS(build_from_relations(spec), relation_error);
    }
    SUBCASE("too few vertices for dimension 4") {
        RelationSpec spec{98, 4, {}, {0, 0, 0, 1}, 2};
        CHECK_THROWS_AS(build_from_relations(spec), relation_error);
    }
    SUBCASE("auxiliary vector length mismatch") {
        RelationSpec spec{97, 5, {{1, 1, 1, 1, 1}}, {0, 1}, 5};
        CHECK_THROWS_AS(build_from_relations(spec), relation_error);
    }
    SUBCASE("relation length mismatch") {
        RelationSpec spec{96, 5, {{1, 1, 1}}, {0, 1, 2, 3, 4}, 5};
        CHECK_THROWS_AS(build_from_relations(spec), relation_error);
    }
    SUBCASE("a vertex forced inside the hull") {
        // v6 = (v1 + v2) / 2 cannot be a vertex of the hull
        RelationSpec spec{95, 6,
                          {{1, 1, 0, 0, 0, -2}, {0, 0, 1, 1, 1, 0}},
                          {0, 0, 0, 0, 0, 1}, 1};
        CHECK_THROWS_AS(build_from_relations(spec), relation_error);
    }
    SUBCASE("weights of a non-Gorenstein weighted projective space") {
        // P(1,1,1,1,3): 3 does not divide 7, so the simplex is not reflexive
        RelationSpec spec{94, 5, {{1, 1, 1, 1, 3}}, {0, 0, 0, 0, 0}, 1};
        CHECK_THROWS_AS(build_from_relations(spec), relation_error);
    }
}

TEST_CASE("auxiliary denominators divide the square of the torsion order") {
    const auto& specs = table16_specs();
    const auto& expected = table16_expected();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CAPTURE(specs[i].label);
        Int square = Int(expected[i].pi1_order) * Int(expected[i].pi1_order);
        CHECK(square % specs[i].aux_denominator == 0);
    }
}
