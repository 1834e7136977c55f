#include "torsionscan/sublattice.hpp"

#include "torsionscan/errors.hpp"

namespace torsionscan {

IntegerMatrix generator_matrix(const SublatticeSpan& span)
{
    for (const IntVector& g : span.generators)
        if (g.size() != span.ambient_rank)
            throw input_error("generator of wrong dimension in sublattice span");
    return IntegerMatrix::from_columns(span.ambient_rank, span.generators);
}

FiniteAbelianGroup quotient_group(const SublatticeSpan& span)
{
    std::vector<Int> chain = quotient_chain(span);
    std::vector<Int> factors;
    std::size_t free_rank = 0;
    for (const Int& c : chain) {
        if (c == 0)
            ++free_rank;
        else if (c > 1)
            factors.push_back(c);
    }
    return FiniteAbelianGroup::from_invariants(std::move(factors), free_rank);
}

std::vector<Int> quotient_chain(const SublatticeSpan& span)
{
    SmithDecomposition s = smith_normal_form(generator_matrix(span));
    std::vector<Int> chain = s.diagonal();
    chain.resize(span.ambient_rank, Int(0)); // rows beyond the diagonal are unconstrained
    return chain;
}

IntegerMatrix lattice_basis(const SublatticeSpan& span)
{
    return hermite_column_basis(generator_matrix(span)).basis;
}

bool spans_same_lattice(const SublatticeSpan& a, const SublatticeSpan& b)
{
    if (a.ambient_rank != b.ambient_rank)
        return false;
    return lattice_basis(a) == lattice_basis(b);
}

FiniteAbelianGroup wedge_square_quotient(std::size_t d, const SublatticeSpan& span)
{
    if (d < 2)
        throw dimension_error("exterior square needs ambient rank >= 2");
    if (span.ambient_rank != d)
        throw input_error("span ambient rank disagrees with requested dimension");
    const std::size_t pairs = d * (d - 1) / 2;
    // pair_index(i, j), i < j, in lexicographic order
    auto pair_index = [d](std::size_t i, std::size_t j) {
        return i * (2 * d - i - 1) / 2 + (j - i - 1);
    };
    std::vector<IntVector> cols;
    cols.reserve(d * span.generators.size());
    for (const IntVector& g : span.generators) {
        if (g.size() != d)
            throw input_error("generator of wrong dimension in sublattice span");
        for (std::size_t a = 0; a < d; ++a) {
            // coordinates of e_a ^ g: the (a, k) slot picks up g_k with the
            // sign that moves e_a into first position
            IntVector col(pairs, Int(0));
            for (std::size_t k = 0; k < d; ++k) {
                if (k == a || g[k] == 0)
                    continue;
                if (a < k)
                    col[pair_index(a, k)] = g[k];
                else
                    col[pair_index(k, a)] = -g[k];
            }
            cols.push_back(std::move(col));
        }
    }
    return quotient_group(SublatticeSpan{pairs, std::move(cols)});
}

FiniteAbelianGroup wedge_square_closed_form(const std::vector<Int>& chain)
{
    const std::size_t d = chain.size();
    std::vector<Int> orders;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            orders.push_back(chain[i]);
    return FiniteAbelianGroup::from_cyclic_factors(orders);
}

} // namespace torsionscan
