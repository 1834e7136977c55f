#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "torsionscan/integers.hpp"

namespace torsionscan {

// Dense integer matrix with exact arithmetic. Row and column operations are
// public because the normal-form routines drive them directly.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols)
    {
    }

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntegerMatrix from_rows(const std::vector<IntVector>& rows);
    // columns become the matrix columns; `rows` fixes the height even when
    // there are no columns at all
    static IntegerMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    IntegerMatrix transposed() const;

    // elementary operations used by the normal forms
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k); // row dst += k * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k); // col dst += k * col src
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    // exact determinant (Bareiss); matrix must be square, empty matrix has det 1
    Int determinant() const;
    // rank over the rationals, fraction-free elimination
    std::size_t rank() const;

    bool operator==(const IntegerMatrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

// U * A * V = D with U, V unimodular and D diagonal, nonnegative, each
// diagonal entry dividing the next, zeros trailing.
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;

    std::vector<Int> diagonal() const;
    std::size_t rank() const; // number of nonzero diagonal entries
};

} // namespace torsionscan
