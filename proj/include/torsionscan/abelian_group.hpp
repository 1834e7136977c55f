#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torsionscan/integers.hpp"

namespace torsionscan {

// Finitely generated abelian group in invariant-factor form: a list of
// torsion orders (each >= 2, each dividing the next) plus a free rank.
// A finite abelian group is isomorphic to its Pontryagin dual, so groups
// that the theory produces as Hom(-, Q/Z) are represented the same way.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;

    static FiniteAbelianGroup trivial() { return {}; }
    // n >= 2 gives Z/n, n == 1 the trivial group, n == 0 a copy of Z
    static FiniteAbelianGroup cyclic(const Int& n);
    // normalizes an arbitrary list of cyclic orders (same conventions as
    // `cyclic`) into invariant-factor form
    static FiniteAbelianGroup from_cyclic_factors(const std::vector<Int>& orders);
    // direct construction; validates the divisibility chain
    static FiniteAbelianGroup from_invariants(std::vector<Int> factors, std::size_t free_rank);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    std::size_t free_rank() const { return free_rank_; }

    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_cyclic() const { return free_rank_ == 0 && factors_.size() <= 1; }

    // order of a finite group; throws internal_error when infinite
    Int order() const;

    bool operator==(const FiniteAbelianGroup&) const = default;

    // "0", "Z/5", "Z/2 + Z/4 + Z^2", ...
    std::string to_string() const;

private:
    std::vector<Int> factors_; // invariant factors, each >= 2, divisibility chain
    std::size_t free_rank_ = 0;
};

} // namespace torsionscan
