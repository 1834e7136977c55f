#include "torsionscan/invariants.hpp"

#include <algorithm>

#include "torsionscan/errors.hpp"
#include "torsionscan/smith.hpp"

namespace torsionscan {

SublatticeSpan codim_filtered_span(const LatticePolytope& dstar, int k)
{
    if (!dstar.is_reflexive())
        throw reflexivity_error("codimension filter needs a reflexive polytope");
    const int d = static_cast<int>(dstar.dim());
    if (k < 1 || k >= d)
        throw input_error("codimension bound must satisfy 1 <= k < dim");
    SublatticeSpan span;
    span.ambient_rank = dstar.dim();
    for (const ClassifiedPoint& cp : dstar.lattice_points())
        if (cp.minimal_face_dim <= d - k - 1)
            span.generators.push_back(cp.point);
    return span;
}

FiniteAbelianGroup fundamental_group(const LatticePolytope& dstar)
{
    if (dstar.dim() < 3)
        throw dimension_error("fundamental group computation needs dimension >= 3");
    const FiniteAbelianGroup q = quotient_group(codim_filtered_span(dstar, 1));
    if (dstar.dim() == 4 && !q.is_cyclic())
        throw internal_error("fundamental group of a 4-dimensional family must be cyclic, got " +
                             q.to_string());
    return q;
}

FiniteAbelianGroup fundamental_group_via_exterior(const LatticePolytope& dstar)
{
    if (dstar.dim() < 3)
        throw dimension_error("fundamental group computation needs dimension >= 3");
    const std::size_t d = dstar.dim();
    SublatticeSpan image;
    image.ambient_rank = d;
    for (const IntVector& v : codim_filtered_span(dstar, 1).generators) {
        // basis of the rank-(d-1) lattice orthogonal to v
        IntegerMatrix vrow(1, d);
        for (std::size_t c = 0; c < d; ++c)
            vrow(0, c) = v[c];
        const IntegerMatrix kern = kernel_basis(vrow);
        if (kern.cols() != d - 1)
            throw internal_error("orthogonal lattice of a boundary point has wrong rank");
        // its top exterior power, written in the standard basis of
        // Lambda^(d-1) Z^d: signed maximal minors
        IntVector wedge(d);
        Int sign = 1;
        for (std::size_t skip = 0; skip < d; ++skip) {
            IntegerMatrix minor(d - 1, d - 1);
            std::size_t rr = 0;
            for (std::size_t r = 0; r < d; ++r) {
                if (r == skip)
                    continue;
                for (std::size_t c = 0; c + 1 < d; ++c)
                    minor(rr, c) = kern(r, c);
                ++rr;
            }
            wedge[skip] = sign * minor.determinant();
            sign = -sign;
        }
        image.generators.push_back(std::move(wedge));
    }
    return quotient_group(image);
}

FiniteAbelianGroup brauer_group(const LatticePolytope& dstar)
{
    if (dstar.dim() < 4)
        throw dimension_error("Brauer computation needs dimension >= 4");
    if (dstar.dim() > 4)
        throw dimension_error("Brauer computation is only established in dimension 4");
    const SublatticeSpan span = codim_filtered_span(dstar, 2);
    const FiniteAbelianGroup w = wedge_square_quotient(4, span);
    // theorem: with c_1 | .. | c_4 the chain of N / N'', the exterior-square
    // quotient is cyclic of order c_3
    const std::vector<Int> chain = quotient_chain(span);
    if (!w.is_cyclic())
        throw internal_error("Brauer group must be cyclic in dimension 4, got " + w.to_string());
    if (w != FiniteAbelianGroup::cyclic(chain[2]))
        throw internal_error("Brauer group " + w.to_string() + " differs from Z/c3 with c3 = " +
                             chain[2].str());
    return w;
}

FiniteAbelianGroup demeyer_ford_brauer(const SublatticeSpan& rays)
{
    if (rays.ambient_rank < 2)
        throw dimension_error("toric Brauer formula needs ambient rank >= 2");
    for (const IntVector& r : rays.generators)
        if (!is_primitive(r))
            throw input_error("fan ray " + to_string(r) + " is not primitive");
    return wedge_square_closed_form(quotient_chain(rays));
}

namespace {

// l(side) - 5 - sum over facets of l* + sum over 2-faces of l* times l* of
// the dual face inside `other`
long long hodge_sum(const LatticePolytope& side, const LatticePolytope& other)
{
    long long h = side.point_count() - 5;
    for (const FaceDescriptor& face : side.faces()) {
        if (face.dim == 3) {
            h -= side.interior_point_count(face);
        } else if (face.dim == 2) {
            const long long inner = side.interior_point_count(face);
            if (inner == 0)
                continue;
            const FaceDescriptor* dual = other.find_face(dual_face_vertices(side, face, other));
            if (dual == nullptr || dual->dim != 1)
                throw internal_error("2-face of a reflexive 4-polytope has no dual edge");
            h += inner * other.interior_point_count(*dual);
        }
    }
    return h;
}

} // namespace

std::pair<long long, long long> stringy_hodge(const LatticePolytope& delta,
                                              const LatticePolytope& dstar)
{
    if (delta.dim() != 4 || dstar.dim() != 4)
        throw dimension_error("stringy Hodge numbers are computed in dimension 4");
    if (!delta.is_reflexive() || !dstar.is_reflexive())
        throw reflexivity_error("stringy Hodge numbers need a reflexive dual pair");
    // mutual duality: the facet normals of each side are the vertices of the
    // other (both lists are kept sorted)
    auto normals = [](const LatticePolytope& p) {
        std::vector<IntVector> n;
        for (const FacetInequality& f : p.facets())
            n.push_back(f.normal);
        std::sort(n.begin(), n.end());
        return n;
    };
    if (normals(delta) != dstar.vertices() || normals(dstar) != delta.vertices())
        throw input_error("polytopes are not a polar dual pair");

    return {hodge_sum(dstar, delta), hodge_sum(delta, dstar)};
}

TorsionReport analyze(const LatticePolytope& delta)
{
    if (delta.dim() != 4)
        throw dimension_error("analysis needs a 4-dimensional polytope");
    if (!delta.is_reflexive())
        throw reflexivity_error("analysis needs a reflexive polytope");
    const LatticePolytope dstar = delta.polar_dual();

    TorsionReport r;
    r.pi1 = fundamental_group(dstar);
    r.brauer = brauer_group(dstar);
    r.A = r.pi1;
    r.B = r.brauer;
    const auto [h11, h21] = stringy_hodge(delta, dstar);
    r.h11 = h11;
    r.h21 = h21;
    r.chi = 2 * (h11 - h21);
    r.p_delta = delta.point_count();
    r.v_delta = delta.vertex_count();
    r.p_dstar = dstar.point_count();
    r.v_dstar = dstar.vertex_count();
    r.tors_k0_order = r.A.order() * r.B.order();
    r.tors_k1_order = r.tors_k0_order;
    return r;
}

} // namespace torsionscan
