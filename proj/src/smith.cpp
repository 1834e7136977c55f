#include "torsionscan/smith.hpp"

#include <cstdlib>

#include "torsionscan/errors.hpp"

namespace torsionscan {

namespace {

// nonzero entry of minimal absolute value in the block starting at (t, t),
// scanning row-major so ties resolve to the first occurrence
bool find_pivot(const IntegerMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc)
{
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            Int a = boost::multiprecision::abs(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithDecomposition s{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n)};
    IntegerMatrix& d = s.D;
    IntegerMatrix& u = s.U;
    IntegerMatrix& v = s.V;

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pr = t, pc = t;
            if (!find_pivot(d, t, pr, pc))
                return s; // remaining block is zero, diagonal ends here
            if (pr != t) {
                d.swap_rows(t, pr);
                u.swap_rows(t, pr);
            }
            if (pc != t) {
                d.swap_cols(t, pc);
                v.swap_cols(t, pc);
            }
            // clear column t below the pivot and row t right of it;
            // truncated quotients leave remainders smaller than the pivot,
            // so the next sweep picks a strictly smaller pivot if any remain
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Int q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Int q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // pivot divides everything in its row and column; force it to
            // divide the rest of the block too
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return s;
}

IntegerMatrix kernel_basis(const IntegerMatrix& a)
{
    SmithDecomposition s = smith_normal_form(a);
    const std::size_t n = a.cols();
    const std::size_t diag = std::min(a.rows(), n);
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < n; ++j)
        if (j >= diag || s.D(j, j) == 0)
            cols.push_back(s.V.column(j));
    return IntegerMatrix::from_columns(n, cols);
}

HermiteBasis hermite_column_basis(const IntegerMatrix& generators)
{
    IntegerMatrix h = generators;
    const std::size_t rows = h.rows();
    const std::size_t n = h.cols();
    HermiteBasis out;
    std::size_t c = 0; // next pivot column
    for (std::size_t r = 0; r < rows && c < n; ++r) {
        // gcd-clear row r across columns c..n-1
        for (;;) {
            std::size_t best = n;
            Int besta = 0;
            for (std::size_t j = c; j < n; ++j) {
                if (h(r, j) == 0)
                    continue;
                Int a = boost::multiprecision::abs(h(r, j));
                if (best == n || a < besta) {
                    best = j;
                    besta = a;
                }
            }
            if (best == n)
                break; // no pivot in this row
            h.swap_cols(c, best);
            bool clean = true;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (h(r, j) == 0)
                    continue;
                Int q = h(r, j) / h(r, c);
                h.add_col_multiple(j, c, -q);
                if (h(r, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (h(r, c) == 0)
            continue;
        if (h(r, c) < 0)
            h.negate_col(c);
        // canonical form: entries left of the pivot reduced into [0, pivot)
        for (std::size_t j = 0; j < c; ++j) {
            Int q = floor_div(h(r, j), h(r, c));
            h.add_col_multiple(j, c, -q);
        }
        out.pivot_rows.push_back(r);
        ++c;
    }
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < c; ++j)
        cols.push_back(h.column(j));
    out.basis = IntegerMatrix::from_columns(rows, cols);
    return out;
}

std::optional<IntVector> lattice_coordinates(const HermiteBasis& basis, const IntVector& x)
{
    const IntegerMatrix& b = basis.basis;
    if (x.size() != b.rows())
        throw input_error("vector of wrong dimension in lattice membership test");
    IntVector rest = x;
    IntVector coords(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const std::size_t r = basis.pivot_rows[j];
        if (rest[r] % b(r, j) != 0)
            return std::nullopt;
        Int q = rest[r] / b(r, j);
        coords[j] = q;
        if (q != 0)
            for (std::size_t i = 0; i < b.rows(); ++i)
                rest[i] -= q * b(i, j);
    }
    for (const Int& e : rest)
        if (e != 0)
            return std::nullopt;
    return coords;
}

} // namespace torsionscan
