#include <doctest.h>

#include <random>

#include "torsionscan/errors.hpp"
#include "torsionscan/smith.hpp"
#include "test_support.hpp"

using namespace torsionscan;

TEST_CASE("smith normal form of the identity is the identity")
{
    const auto a = IntegerMatrix::identity(2);
    const auto s = smith_normal_form(a);
    CHECK(s.D == a);
    CHECK(s.U == a);
    CHECK(s.V == a);
}

TEST_CASE("smith normal form of [[2,4],[6,8]]")
{
    // gcd of entries is 2 and |det| = 8, so the diagonal must be (2, 4)
    const auto a = IntegerMatrix::from_rows({{2, 4}, {6, 8}});
    const auto s = smith_normal_form(a);
    CHECK(s.diagonal() == std::vector<Int>{2, 4});
    CHECK(s.U * a * s.V == s.D);
    CHECK(boost::multiprecision::abs(s.U.determinant()) == 1);
    CHECK(boost::multiprecision::abs(s.V.determinant()) == 1);
}

TEST_CASE("smith normal form of a zero matrix")
{
    const IntegerMatrix a(2, 3);
    const auto s = smith_normal_form(a);
    CHECK(s.D.is_zero());
    CHECK(s.rank() == 0);
    CHECK(kernel_basis(a).cols() == 3);
}

TEST_CASE("smith normal form of empty shapes")
{
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {2, 0}}) {
        const IntegerMatrix a(r, c);
        const auto s = smith_normal_form(a);
        CHECK(s.D.rows() == r);
        CHECK(s.D.cols() == c);
        CHECK(s.U == IntegerMatrix::identity(r));
        CHECK(s.V == IntegerMatrix::identity(c));
    }
}

TEST_CASE("smith normal form is deterministic")
{
    const auto a = IntegerMatrix::from_rows({{3, -1, 4}, {1, 5, -9}, {2, 6, 5}});
    const auto s1 = smith_normal_form(a);
    const auto s2 = smith_normal_form(a);
    CHECK(s1.U == s2.U);
    CHECK(s1.D == s2.D);
    CHECK(s1.V == s2.V);
}

TEST_CASE("smith properties hold on random matrices")
{
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = testsupport::random_matrix(rng);
        const auto fail = testsupport::check_smith_properties(a);
        if (fail)
            FAIL(*fail);
    }
}

TEST_CASE("kernel basis spans the kernel")
{
    const auto a = IntegerMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
    const auto k = kernel_basis(a);
    CHECK(k.cols() == 2); // rank 1
    CHECK((a * k).is_zero());
}

TEST_CASE("hermite basis of simple spans")
{
    // {e1, e1+e2} spans all of Z^2
    auto h = hermite_column_basis(IntegerMatrix::from_rows({{1, 1}, {0, 1}}));
    CHECK(h.basis == IntegerMatrix::identity(2));

    // {2e1, 4e1} in Z^1 collapses to {2e1}
    h = hermite_column_basis(IntegerMatrix::from_rows({{2, 4}}));
    CHECK(h.basis == IntegerMatrix::from_rows({{2}}));

    // zero span has an empty basis
    h = hermite_column_basis(IntegerMatrix(3, 2));
    CHECK(h.basis.cols() == 0);
    CHECK(h.basis.rows() == 3);
}

TEST_CASE("hermite basis is canonical under generator shuffling")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        IntegerMatrix g(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                g(i, j) = entry(rng);
        auto h1 = hermite_column_basis(g);
        // shuffle columns and add a multiple of one generator to another
        IntegerMatrix g2 = g;
        g2.swap_cols(0, 3);
        g2.add_col_multiple(1, 2, 5);
        auto h2 = hermite_column_basis(g2);
        CHECK(h1.basis == h2.basis);
        CHECK(h1.pivot_rows == h2.pivot_rows);
    }
}

TEST_CASE("lattice membership via hermite basis")
{
    // index-2 sublattice of Z^2: all (a, b) with a + b even
    const auto h = hermite_column_basis(IntegerMatrix::from_rows({{1, 0}, {1, 2}}));
    CHECK(lattice_contains(h, {3, 1}));
    CHECK(lattice_contains(h, {-2, 0}));
    CHECK(!lattice_contains(h, {1, 0}));

    const auto coords = lattice_coordinates(h, {3, 1});
    REQUIRE(coords.has_value());
    // reconstruct: coords against basis columns
    IntVector back(2, 0);
    for (std::size_t j = 0; j < h.basis.cols(); ++j)
        for (std::size_t i = 0; i < 2; ++i)
            back[i] += (*coords)[j] * h.basis(i, j);
    CHECK(back == IntVector{3, 1});
}
