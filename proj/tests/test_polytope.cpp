#include <doctest.h>

#include <algorithm>
#include <map>

#include "torsionscan/errors.hpp"
#include "torsionscan/polytope.hpp"

using namespace torsionscan;

namespace {

LatticePolytope square()
{
    return LatticePolytope::from_points(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
}

LatticePolytope simplex4()
{
    return LatticePolytope::from_points(
        4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}});
}

LatticePolytope segment()
{
    return LatticePolytope::from_points(1, {{-1}, {1}});
}

std::map<int, long long> f_vector(const LatticePolytope& p)
{
    std::map<int, long long> f;
    for (const FaceDescriptor& face : p.faces())
        ++f[face.dim];
    return f;
}

long long interior_sum_over_faces(const LatticePolytope& p)
{
    long long s = p.interior_point_count();
    for (const FaceDescriptor& face : p.faces())
        s += p.interior_point_count(face);
    return s;
}

} // namespace

TEST_CASE("square: facets, points, faces")
{
    const auto s = square();
    REQUIRE(s.facets().size() == 4);
    for (const FacetInequality& f : s.facets())
        CHECK(f.offset == -1);
    // facets come sorted lexicographically by normal
    CHECK(s.facets()[0].normal == IntVector{-1, 0});
    CHECK(s.facets()[1].normal == IntVector{0, -1});
    CHECK(s.facets()[2].normal == IntVector{0, 1});
    CHECK(s.facets()[3].normal == IntVector{1, 0});

    CHECK(s.is_reflexive());
    CHECK(s.point_count() == 9);
    CHECK(s.interior_point_count() == 1);

    const auto f = f_vector(s);
    CHECK(f.at(0) == 4);
    CHECK(f.at(1) == 4);

    // each edge holds exactly one extra lattice point, each vertex itself
    for (const FaceDescriptor& face : s.faces())
        CHECK(s.interior_point_count(face) == 1);
    CHECK(interior_sum_over_faces(s) == s.point_count());

    // lattice points are produced in ascending lexicographic order
    CHECK(std::is_sorted(s.lattice_points().begin(), s.lattice_points().end(),
                         [](const ClassifiedPoint& a, const ClassifiedPoint& b) {
                             return a.point < b.point;
                         }));
}

TEST_CASE("square dual is the diamond and polarity is an involution")
{
    const auto s = square();
    const auto d = s.polar_dual();
    CHECK(d.vertices() ==
          std::vector<IntVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
    CHECK(d.is_reflexive());
    CHECK(d.point_count() == 5);
    CHECK(d.polar_dual() == s);
}

TEST_CASE("simplex with vertices e_i and -sum e_i")
{
    const auto p = simplex4();
    CHECK(p.is_reflexive());
    CHECK(p.facets().size() == 5);
    CHECK(p.point_count() == 6); // five vertices plus the origin
    const auto f = f_vector(p);
    CHECK(f.at(0) == 5);
    CHECK(f.at(1) == 10);
    CHECK(f.at(2) == 10);
    CHECK(f.at(3) == 5);

    // every facet must carry at least dim affinely independent vertices
    for (const FacetInequality& facet : p.facets()) {
        std::vector<IntVector> on;
        for (const IntVector& v : p.vertices())
            if (dot(v, facet.normal) == facet.offset)
                on.push_back(v);
        CHECK(affine_rank(on) == 3);
    }
}

TEST_CASE("dual of the simplex is the quintic polytope with 126 points")
{
    const auto d = simplex4().polar_dual();
    CHECK(d.vertex_count() == 5);
    // dual vertices are the facet normals
    CHECK(std::find(d.vertices().begin(), d.vertices().end(), IntVector{-1, -1, -1, -1}) !=
          d.vertices().end());
    CHECK(std::find(d.vertices().begin(), d.vertices().end(), IntVector{4, -1, -1, -1}) !=
          d.vertices().end());
    // |5 simplex_3 dilations| = C(9,4): solutions of y_1+..+y_4 <= 5 in Z>=0
    CHECK(d.point_count() == 126);
    CHECK(d.is_reflexive());
    CHECK(d.polar_dual() == simplex4());
}

TEST_CASE("euler relation on proper faces")
{
    for (const LatticePolytope& p :
         {square(), simplex4(), segment(), product(segment(), square())}) {
        long long alt = 0;
        for (const auto& [dim, count] : f_vector(p))
            alt += (dim % 2 == 0) ? count : -count;
        CHECK(alt == 1 - ((p.dim() % 2 == 0) ? 1 : -1));
    }
}

TEST_CASE("non-reflexive triangle is detected")
{
    const auto t = LatticePolytope::from_points(2, {{2, 0}, {0, 1}, {-1, -1}});
    CHECK(!t.is_reflexive());
    CHECK(t.origin_is_interior());
    CHECK_THROWS_AS(t.polar_dual(), reflexivity_error);
}

TEST_CASE("degenerate input is rejected")
{
    CHECK_THROWS_AS(LatticePolytope::from_points(2, {{0, 0}, {2, 0}}), dimension_error);
    CHECK_THROWS_AS(LatticePolytope::from_points(2, {{1, 1}}), dimension_error);
}

TEST_CASE("polar dual requires the origin strictly inside")
{
    const auto shifted =
        LatticePolytope::from_points(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    CHECK(!shifted.is_reflexive());
    CHECK(!shifted.origin_is_interior());
    CHECK_THROWS_AS(shifted.polar_dual(), input_error);
}

TEST_CASE("redundant input points are dropped with warnings")
{
    std::vector<std::string> warnings;
    const auto s = LatticePolytope::from_points(
        2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}, {0, 1}, {1, 1}}, &warnings);
    CHECK(s.vertex_count() == 4);
    CHECK(s == square());
    REQUIRE(warnings.size() == 3);
    CHECK(warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("minimal faces of classified points")
{
    const auto s = square();
    for (const ClassifiedPoint& cp : s.lattice_points()) {
        int nonzero = 0;
        for (const Int& x : cp.point)
            nonzero += (x != 0);
        if (cp.point == IntVector{0, 0})
            CHECK(cp.minimal_face_dim == 2);
        else if (nonzero == 2)
            CHECK(cp.minimal_face_dim == 0); // corners
        else
            CHECK(cp.minimal_face_dim == 1); // edge midpoints
    }
}

TEST_CASE("products of reflexive polytopes are reflexive")
{
    const auto cube3 = product(segment(), square());
    CHECK(cube3.dim() == 3);
    CHECK(cube3.vertex_count() == 8);
    CHECK(cube3.facets().size() == 6);
    CHECK(cube3.is_reflexive());
    CHECK(cube3.point_count() == 27);
    CHECK(interior_sum_over_faces(cube3) == 27);

    const auto t = LatticePolytope::from_points(2, {{1, 0}, {0, 1}, {-1, -1}});
    const auto tt = product(t, t);
    CHECK(tt.dim() == 4);
    CHECK(tt.vertex_count() == 9);
    CHECK(tt.is_reflexive());
    CHECK(tt.polar_dual().polar_dual() == tt);
}

TEST_CASE("dual faces pair to -1 and have complementary dimension")
{
    for (const LatticePolytope& p : {simplex4(), product(segment(), square())}) {
        const auto d = p.polar_dual();
        for (const FaceDescriptor& face : p.faces()) {
            const auto dual_set = dual_face_vertices(p, face, d);
            const FaceDescriptor* dual_face = d.find_face(dual_set);
            REQUIRE(dual_face != nullptr);
            CHECK(dual_face->dim == static_cast<int>(p.dim()) - 1 - face.dim);
            for (int v : face.vertex_indices)
                for (int w : dual_face->vertex_indices)
                    CHECK(dot(p.vertices()[v], d.vertices()[w]) == -1);
        }
    }
}
