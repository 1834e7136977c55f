#include "torsionscan/polytope.hpp"

#include <algorithm>
#include <set>

#include "torsionscan/errors.hpp"
#include "torsionscan/int_matrix.hpp"

namespace torsionscan {

namespace {

// ascending index combinations, first call with idx = {0, 1, ..., k-1}
bool next_combination(std::vector<std::size_t>& idx, std::size_t n)
{
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// normal of the hyperplane through d affinely independent points, as the
// signed maximal minors of the difference matrix; zero when the points are
// affinely dependent
IntVector hyperplane_normal(const std::vector<IntVector>& pts, const std::vector<std::size_t>& idx,
                            std::size_t d)
{
    IntegerMatrix diff(d - 1, d);
    for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            diff(r, c) = pts[idx[r + 1]][c] - pts[idx[0]][c];
    IntVector n(d);
    Int sign = 1;
    for (std::size_t skip = 0; skip < d; ++skip) {
        IntegerMatrix minor(d - 1, d - 1);
        for (std::size_t r = 0; r + 1 < d; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == skip)
                    continue;
                minor(r, cc++) = diff(r, c);
            }
        }
        n[skip] = sign * minor.determinant();
        sign = -sign;
    }
    return n;
}

} // namespace

int affine_rank(const std::vector<IntVector>& points)
{
    if (points.empty())
        return -1;
    const std::size_t d = points.front().size();
    IntegerMatrix diff(points.size() - 1, d);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t c = 0; c < d; ++c)
            diff(i - 1, c) = points[i][c] - points[0][c];
    return static_cast<int>(diff.rank());
}

void LatticePolytope::build_facets(const std::vector<IntVector>& points)
{
    const std::size_t d = dim_;
    const std::size_t n = points.size();
    // exhaustive supporting-hyperplane search: every facet of a
    // full-dimensional polytope passes through d affinely independent
    // vertices, so scanning all d-subsets finds each facet at least once
    std::set<std::pair<IntVector, Int>> found;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i)
        idx[i] = i;
    do {
        IntVector normal = hyperplane_normal(points, idx, d);
        Int g = gcd_of(normal);
        if (g == 0)
            continue; // affinely dependent subset
        for (Int& x : normal)
            x /= g;
        const Int base = dot(points[idx[0]], normal);
        Int lo = base, hi = base;
        for (const IntVector& p : points) {
            Int v = dot(p, normal);
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        if (lo == hi)
            continue; // cannot happen for full-dimensional input
        if (base == lo) {
            found.emplace(normal, lo);
        } else if (base == hi) {
            for (Int& x : normal)
                x = -x;
            found.emplace(std::move(normal), -hi);
        }
        // hyperplane cuts through the hull otherwise: not supporting
    } while (next_combination(idx, n));

    facets_.clear();
    for (const auto& [normal, offset] : found)
        facets_.push_back(FacetInequality{normal, offset});
}

std::vector<int> LatticePolytope::active_facet_set(const IntVector& x) const
{
    std::vector<int> active;
    for (std::size_t f = 0; f < facets_.size(); ++f)
        if (dot(x, facets_[f].normal) == facets_[f].offset)
            active.push_back(static_cast<int>(f));
    return active;
}

void LatticePolytope::reduce_to_vertices(const std::vector<IntVector>& points,
                                         std::vector<std::string>* warnings)
{
    // A point is a vertex iff it is alone on the face cut out by all the
    // facets through it.
    std::vector<std::vector<int>> active(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        active[i] = active_facet_set(points[i]);

    for (std::size_t i = 0; i < points.size(); ++i) {
        if (active[i].empty()) {
            if (warnings)
                warnings->push_back("dropped interior point " + to_string(points[i]));
            continue;
        }
        bool alone = true;
        for (std::size_t j = 0; j < points.size() && alone; ++j)
            if (j != i && std::includes(active[j].begin(), active[j].end(),
                                        active[i].begin(), active[i].end()))
                alone = false;
        if (alone)
            vertices_.push_back(points[i]);
        else if (warnings)
            warnings->push_back("dropped non-vertex boundary point " + to_string(points[i]));
    }
    std::sort(vertices_.begin(), vertices_.end());
}

LatticePolytope LatticePolytope::from_points(std::size_t dim, const std::vector<IntVector>& points,
                                             std::vector<std::string>* warnings)
{
    if (dim == 0)
        throw dimension_error("zero-dimensional ambient lattice");
    for (const IntVector& p : points)
        if (p.size() != dim)
            throw dimension_error("point of wrong dimension");

    std::vector<IntVector> unique(points);
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    if (warnings && unique.size() != points.size())
        warnings->push_back("dropped " + std::to_string(points.size() - unique.size()) +
                            " duplicate point(s)");

    const int arank = affine_rank(unique);
    if (arank != static_cast<int>(dim))
        throw dimension_error("point set spans dimension " + std::to_string(arank) +
                              " inside Z^" + std::to_string(dim));

    LatticePolytope p;
    p.dim_ = dim;
    p.build_facets(unique);
    p.reduce_to_vertices(unique, warnings);

    p.vertex_active_sets_.resize(p.vertices_.size());
    for (std::size_t i = 0; i < p.vertices_.size(); ++i)
        p.vertex_active_sets_[i] = p.active_facet_set(p.vertices_[i]);

    p.build_faces();
    p.build_points();
    return p;
}

void LatticePolytope::build_faces()
{
    // vertex sets of the facets seed the lattice; every proper face is an
    // intersection of facets, so closing under intersection finds them all
    std::vector<std::vector<int>> facet_sets(facets_.size());
    for (std::size_t f = 0; f < facets_.size(); ++f)
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            if (std::binary_search(vertex_active_sets_[v].begin(), vertex_active_sets_[v].end(),
                                   static_cast<int>(f)))
                facet_sets[f].push_back(static_cast<int>(v));

    std::set<std::vector<int>> seen(facet_sets.begin(), facet_sets.end());
    std::vector<std::vector<int>> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        std::vector<int> s = std::move(queue.back());
        queue.pop_back();
        for (const auto& f : facet_sets) {
            std::vector<int> inter;
            std::set_intersection(s.begin(), s.end(), f.begin(), f.end(),
                                  std::back_inserter(inter));
            if (inter.empty() || inter == s)
                continue;
            if (seen.insert(inter).second)
                queue.push_back(inter);
        }
    }

    for (const std::vector<int>& s : seen) {
        FaceDescriptor face;
        face.vertex_indices = s;
        std::vector<IntVector> pts;
        for (int v : s)
            pts.push_back(vertices_[v]);
        face.dim = affine_rank(pts);
        for (std::size_t f = 0; f < facet_sets.size(); ++f)
            if (std::includes(facet_sets[f].begin(), facet_sets[f].end(), s.begin(), s.end()))
                face.active_facets.push_back(static_cast<int>(f));
        faces_.push_back(std::move(face));
    }
    std::sort(faces_.begin(), faces_.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertex_indices < b.vertex_indices;
    });
    for (std::size_t i = 0; i < faces_.size(); ++i)
        face_by_vertex_set_[faces_[i].vertex_indices] = i;
}

void LatticePolytope::build_points()
{
    IntVector lo = vertices_.front(), hi = vertices_.front();
    for (const IntVector& v : vertices_)
        for (std::size_t c = 0; c < dim_; ++c) {
            if (v[c] < lo[c]) lo[c] = v[c];
            if (v[c] > hi[c]) hi[c] = v[c];
        }

    face_interior_counts_.assign(faces_.size(), 0);
    IntVector cur = lo;
    for (;;) {
        bool inside = true;
        for (const FacetInequality& f : facets_)
            if (dot(cur, f.normal) < f.offset) {
                inside = false;
                break;
            }
        if (inside) {
            ClassifiedPoint cp;
            cp.point = cur;
            std::vector<int> active = active_facet_set(cur);
            if (active.empty()) {
                cp.minimal_face_dim = static_cast<int>(dim_);
                cp.minimal_face_vertices.resize(vertices_.size());
                for (std::size_t v = 0; v < vertices_.size(); ++v)
                    cp.minimal_face_vertices[v] = static_cast<int>(v);
                ++interior_points_;
            } else {
                // smallest face containing the point: the vertices lying on
                // every facet the point lies on
                for (std::size_t v = 0; v < vertices_.size(); ++v)
                    if (std::includes(vertex_active_sets_[v].begin(),
                                      vertex_active_sets_[v].end(), active.begin(),
                                      active.end()))
                        cp.minimal_face_vertices.push_back(static_cast<int>(v));
                auto it = face_by_vertex_set_.find(cp.minimal_face_vertices);
                if (it == face_by_vertex_set_.end())
                    throw internal_error("lattice point classified to a non-face");
                cp.minimal_face_dim = faces_[it->second].dim;
                ++face_interior_counts_[it->second];
            }
            points_.push_back(std::move(cp));
        }
        // lexicographic odometer over the bounding box
        std::size_t c = dim_;
        while (c-- > 0) {
            if (cur[c] < hi[c]) {
                ++cur[c];
                for (std::size_t k = c + 1; k < dim_; ++k)
                    cur[k] = lo[k];
                break;
            }
            if (c == 0)
                return;
        }
    }
}

bool LatticePolytope::is_reflexive() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [](const FacetInequality& f) { return f.offset == -1; });
}

bool LatticePolytope::origin_is_interior() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [](const FacetInequality& f) { return f.offset < 0; });
}

LatticePolytope LatticePolytope::polar_dual() const
{
    if (!origin_is_interior())
        throw input_error("polar dual needs the origin strictly inside the polytope");
    for (const FacetInequality& f : facets_)
        if (f.offset != -1)
            throw reflexivity_error("polar dual is not a lattice polytope: facet " +
                                    to_string(f.normal) + " has offset " + f.offset.str());
    std::vector<IntVector> normals;
    normals.reserve(facets_.size());
    for (const FacetInequality& f : facets_)
        normals.push_back(f.normal);
    return from_points(dim_, normals);
}

long long LatticePolytope::interior_point_count(const FaceDescriptor& face) const
{
    auto it = face_by_vertex_set_.find(face.vertex_indices);
    if (it == face_by_vertex_set_.end())
        throw input_error("face does not belong to this polytope");
    return face_interior_counts_[it->second];
}

const FaceDescriptor* LatticePolytope::find_face(const std::vector<int>& vertex_indices) const
{
    auto it = face_by_vertex_set_.find(vertex_indices);
    return it == face_by_vertex_set_.end() ? nullptr : &faces_[it->second];
}

LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b)
{
    std::vector<IntVector> pts;
    pts.reserve(a.vertices().size() * b.vertices().size());
    for (const IntVector& va : a.vertices())
        for (const IntVector& vb : b.vertices()) {
            IntVector p = va;
            p.insert(p.end(), vb.begin(), vb.end());
            pts.push_back(std::move(p));
        }
    return LatticePolytope::from_points(a.dim() + b.dim(), pts);
}

std::vector<int> dual_face_vertices(const LatticePolytope& p, const FaceDescriptor& face,
                                    const LatticePolytope& dual)
{
    std::vector<int> out;
    for (std::size_t w = 0; w < dual.vertices().size(); ++w) {
        bool all = true;
        for (int v : face.vertex_indices)
            if (dot(p.vertices()[v], dual.vertices()[w]) != -1) {
                all = false;
                break;
            }
        if (all)
            out.push_back(static_cast<int>(w));
    }
    return out;
}

} // namespace torsionscan
