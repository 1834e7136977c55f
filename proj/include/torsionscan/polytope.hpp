#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "torsionscan/integers.hpp"

namespace torsionscan {

// one facet: <x, normal> >= offset for every x in the polytope, with a
// primitive inner normal
struct FacetInequality {
    IntVector normal;
    Int offset;
    bool operator==(const FacetInequality&) const = default;
};

struct FaceDescriptor {
    int dim = 0;
    std::vector<int> vertex_indices; // sorted indices into vertices()
    std::vector<int> active_facets;  // all facets containing the face, sorted
};

struct ClassifiedPoint {
    IntVector point;
    int minimal_face_dim = 0;                // dim() for the interior
    std::vector<int> minimal_face_vertices;  // vertex set of the smallest face containing it
};

// Full-dimensional lattice polytope. Everything derived (facets, face
// lattice, classified lattice points) is computed once at construction, so
// a built value can be shared across threads freely.
class LatticePolytope {
public:
    // Convex hull of `points` in Z^dim. The hull must be full-dimensional.
    // Duplicates and non-vertex points are dropped; one note per dropped
    // point is appended to `warnings` when a sink is given.
    static LatticePolytope from_points(std::size_t dim, const std::vector<IntVector>& points,
                                       std::vector<std::string>* warnings = nullptr);

    std::size_t dim() const { return dim_; }
    const std::vector<IntVector>& vertices() const { return vertices_; }       // lex sorted
    const std::vector<FacetInequality>& facets() const { return facets_; }     // lex by normal
    const std::vector<ClassifiedPoint>& lattice_points() const { return points_; } // lex order
    const std::vector<FaceDescriptor>& faces() const { return faces_; } // proper faces by (dim, vertices)

    bool is_reflexive() const; // every facet offset is -1
    bool origin_is_interior() const;
    // Polar dual {y : <x, y> >= -1 on P}. Needs the origin strictly inside;
    // the dual is a lattice polytope exactly for reflexive P, anything else
    // raises reflexivity_error.
    LatticePolytope polar_dual() const;

    long long point_count() const { return static_cast<long long>(points_.size()); }
    long long vertex_count() const { return static_cast<long long>(vertices_.size()); }
    long long interior_point_count() const { return interior_points_; }
    // number of lattice points whose minimal face is exactly `face`
    long long interior_point_count(const FaceDescriptor& face) const;

    // face with the given sorted vertex index set, or nullptr
    const FaceDescriptor* find_face(const std::vector<int>& vertex_indices) const;

    bool operator==(const LatticePolytope& other) const
    {
        return dim_ == other.dim_ && vertices_ == other.vertices_;
    }

private:
    LatticePolytope() = default;
    void build_facets(const std::vector<IntVector>& points);
    void reduce_to_vertices(const std::vector<IntVector>& points,
                            std::vector<std::string>* warnings);
    void build_faces();
    void build_points();
    std::vector<int> active_facet_set(const IntVector& x) const;

    std::size_t dim_ = 0;
    std::vector<IntVector> vertices_;
    std::vector<FacetInequality> facets_;
    std::vector<FaceDescriptor> faces_;
    std::vector<ClassifiedPoint> points_;
    std::vector<long long> face_interior_counts_;
    std::map<std::vector<int>, std::size_t> face_by_vertex_set_;
    std::vector<std::vector<int>> vertex_active_sets_;
    long long interior_points_ = 0;
};

// cartesian product: vertices are all concatenated vertex pairs
LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b);

// Vertex indices (into `dual`) of the dual face: the locus of the dual
// polytope pairing to -1 against every vertex of `face`. For a reflexive
// polytope the result spans a face of dimension dim - 1 - face.dim.
std::vector<int> dual_face_vertices(const LatticePolytope& p, const FaceDescriptor& face,
                                    const LatticePolytope& dual);

// affine dimension of a point set (-1 for the empty set)
int affine_rank(const std::vector<IntVector>& points);

} // namespace torsionscan
