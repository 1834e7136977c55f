#include "torsionscan/abelian_group.hpp"

#include "torsionscan/errors.hpp"
#include "torsionscan/smith.hpp"

namespace torsionscan {

FiniteAbelianGroup FiniteAbelianGroup::cyclic(const Int& n)
{
    return from_cyclic_factors({n});
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_factors(const std::vector<Int>& orders)
{
    FiniteAbelianGroup g;
    std::vector<Int> torsion;
    for (const Int& n : orders) {
        if (n < 0)
            throw input_error("negative cyclic order");
        if (n == 0)
            ++g.free_rank_; // Z/0 is Z
        else if (n > 1)
            torsion.push_back(n);
    }
    // Smith normal form of the diagonal matrix of the orders is exactly the
    // invariant-factor normalization of their direct sum.
    IntegerMatrix diag(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i)
        diag(i, i) = torsion[i];
    for (const Int& d : smith_normal_form(diag).diagonal())
        if (d > 1)
            g.factors_.push_back(d);
    return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_invariants(std::vector<Int> factors, std::size_t free_rank)
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2)
            throw input_error("invariant factor below 2");
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw input_error("invariant factors do not form a divisibility chain");
    }
    FiniteAbelianGroup g;
    g.factors_ = std::move(factors);
    g.free_rank_ = free_rank;
    return g;
}

Int FiniteAbelianGroup::order() const
{
    if (!is_finite())
        throw internal_error("order of an infinite group requested");
    Int n = 1;
    for (const Int& f : factors_)
        n *= f;
    return n;
}

std::string FiniteAbelianGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::string s;
    for (const Int& f : factors_) {
        if (!s.empty())
            s += " + ";
        s += "Z/" + f.str();
    }
    if (free_rank_ > 0) {
        if (!s.empty())
            s += " + ";
        s += free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
    }
    return s;
}

} // namespace torsionscan
