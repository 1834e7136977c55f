#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// inputs and the Smith-form property oracle (transform identity,
// unimodularity, divisibility chain, minor gcds).

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "torsionscan/int_matrix.hpp"
#include "torsionscan/smith.hpp"
#include "torsionscan/sublattice.hpp"

namespace testsupport {

using torsionscan::Int;
using torsionscan::IntVector;
using torsionscan::IntegerMatrix;
using torsionscan::SublatticeSpan;

inline IntegerMatrix random_matrix(std::mt19937& rng)
{
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntegerMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = entry(rng);
    return m;
}

inline SublatticeSpan random_span(std::mt19937& rng)
{
    std::uniform_int_distribution<int> dim(3, 4);
    std::uniform_int_distribution<int> entry(-6, 6);
    SublatticeSpan s;
    s.ambient_rank = static_cast<std::size_t>(dim(rng));
    std::uniform_int_distribution<int> count(1, 2 * static_cast<int>(s.ambient_rank));
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
        IntVector g(s.ambient_rank);
        for (Int& x : g)
            x = entry(rng);
        s.generators.push_back(std::move(g));
    }
    return s;
}

// gcd of all k x k minors of `a`
inline Int minor_gcd(const IntegerMatrix& a, std::size_t k)
{
    std::vector<std::size_t> rows(k), cols(k);
    Int g = 0;

    auto next_combination = [](std::vector<std::size_t>& idx, std::size_t n) {
        std::size_t k2 = idx.size();
        for (std::size_t i = k2; i-- > 0;) {
            if (idx[i] + (k2 - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k2; ++j)
                    idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    for (std::size_t i = 0; i < k; ++i)
        rows[i] = i;
    do {
        for (std::size_t i = 0; i < k; ++i)
            cols[i] = i;
        do {
            IntegerMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = a(rows[i], cols[j]);
            g = boost::multiprecision::gcd(g, sub.determinant());
        } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
    return g;
}

// Full property check of one Smith decomposition. Returns a description of
// the first violated property, or nullopt when everything holds. Minor gcds
// are checked up to order `minor_limit`.
inline std::optional<std::string> check_smith_properties(const IntegerMatrix& a,
                                                         std::size_t minor_limit = 3)
{
    using torsionscan::smith_normal_form;
    const auto s = smith_normal_form(a);

    if (s.U * a * s.V != s.D)
        return "U*A*V != D for\n" + a.to_string();
    Int du = s.U.determinant();
    Int dv = s.V.determinant();
    if (du != 1 && du != -1)
        return "U not unimodular for\n" + a.to_string();
    if (dv != 1 && dv != -1)
        return "V not unimodular for\n" + a.to_string();

    const std::vector<Int> diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] < 0)
            return "negative diagonal entry for\n" + a.to_string();
        if (i + 1 < diag.size()) {
            if (diag[i] == 0 && diag[i + 1] != 0)
                return "zero before nonzero on diagonal for\n" + a.to_string();
            if (diag[i] != 0 && diag[i + 1] % diag[i] != 0)
                return "diagonal not a divisibility chain for\n" + a.to_string();
        }
    }
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && s.D(i, j) != 0)
                return "D not diagonal for\n" + a.to_string();

    // d_1 * ... * d_k equals the gcd of all k x k minors
    const std::size_t kmax = std::min({minor_limit, a.rows(), a.cols()});
    Int prod = 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        prod *= (k - 1 < diag.size()) ? diag[k - 1] : Int(0);
        if (minor_gcd(a, k) != prod)
            return "minor gcd of order " + std::to_string(k) + " disagrees for\n" + a.to_string();
    }
    return std::nullopt;
}

// The exterior-square quotient computed from generators must agree with the
// pairwise closed form evaluated on the invariant chain.
inline std::optional<std::string> check_wedge_agreement(const SublatticeSpan& s)
{
    using torsionscan::quotient_chain;
    using torsionscan::wedge_square_closed_form;
    using torsionscan::wedge_square_quotient;
    const auto direct = wedge_square_quotient(s.ambient_rank, s);
    const auto closed = wedge_square_closed_form(quotient_chain(s));
    if (direct != closed) {
        std::string msg = "wedge quotient disagrees with closed form: " + direct.to_string() +
                          " vs " + closed.to_string() + " for generators";
        for (const IntVector& g : s.generators)
            msg += " " + torsionscan::to_string(g);
        return msg;
    }
    return std::nullopt;
}

} // namespace testsupport
