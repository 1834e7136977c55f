#include "torsionscan/int_matrix.hpp"

#include <algorithm>
#include <utility>

#include "torsionscan/errors.hpp"

namespace torsionscan {

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows)
{
    std::vector<IntVector> converted;
    for (const auto& r : rows)
        converted.emplace_back(r.begin(), r.end());
    return from_rows(converted);
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw input_error("ragged row list in matrix construction");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols)
{
    IntegerMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw input_error("column of wrong height in matrix construction");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

IntVector IntegerMatrix::row(std::size_t r) const
{
    IntVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = (*this)(r, j);
    return v;
}

IntVector IntegerMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::transposed() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k)
{
    if (k == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += k * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k)
{
    if (k == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) += k * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t r)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(r, j) = -(*this)(r, j);
}

void IntegerMatrix::negate_col(std::size_t c)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, c) = -(*this)(i, c);
}

Int IntegerMatrix::determinant() const
{
    if (!is_square())
        throw input_error("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntegerMatrix m(*this);
    Int sign = 1;
    Int prev = 1;
    // Bareiss fraction-free elimination: every division below is exact
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap == k)
                return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t IntegerMatrix::rank() const
{
    IntegerMatrix m(*this);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m(pivot, c) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m(i, c) == 0)
                continue;
            const Int a = m(r, c);
            const Int b = m(i, c);
            Int content = 0;
            for (std::size_t j = c; j < cols_; ++j) {
                m(i, j) = a * m(i, j) - b * m(r, j);
                content = boost::multiprecision::gcd(content, m(i, j));
            }
            if (content > 1)
                for (std::size_t j = c; j < cols_; ++j)
                    m(i, j) /= content;
        }
        ++r;
    }
    return r;
}

std::string IntegerMatrix::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += " ";
            s += (*this)(i, j).str();
        }
        s += "]";
        if (i + 1 < rows_) s += "\n";
    }
    return s;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw input_error("matrix product shape mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<Int> SmithDecomposition::diagonal() const
{
    std::vector<Int> d;
    const std::size_t n = std::min(D.rows(), D.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(D(i, i));
    return d;
}

std::size_t SmithDecomposition::rank() const
{
    std::size_t r = 0;
    for (const Int& d : diagonal())
        if (d != 0)
            ++r;
    return r;
}

} // namespace torsionscan
