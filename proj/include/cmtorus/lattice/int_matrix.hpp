#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmtorus::lattice {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// A matrix with `r` rows and `c` columns is read as a map Z^c -> Z^r
/// acting on column vectors. Zero-sized matrices are legal everywhere.
class IntMatrix
{
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);
    static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);
    static IntMatrix diagonal(const IntVector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Bounds-checked access; throws DimensionMismatch.
    Integer& at(std::size_t i, std::size_t j);
    const Integer& at(std::size_t i, std::size_t j) const;

    IntVector column(std::size_t j) const;
    IntVector row(std::size_t i) const;
    void set_column(std::size_t j, const IntVector& v);

    IntMatrix transpose() const;
    IntMatrix columns_range(std::size_t first, std::size_t last) const;
    IntMatrix rows_range(std::size_t first, std::size_t last) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    IntMatrix& operator+=(const IntMatrix& o);
    IntMatrix& operator-=(const IntMatrix& o);
    IntMatrix& operator*=(const Integer& k);

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(IntMatrix a, const Integer& k) { return a *= k; }
    friend IntMatrix operator*(const Integer& k, IntMatrix a) { return a *= k; }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& v);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// [A | B] (same row count).
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [A ; B] (same column count).
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Block diagonal matrix.
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// Determinant by fraction-free elimination (Bareiss). Square only.
Integer determinant(const IntMatrix& m);

bool is_zero(const IntVector& v);

}  // namespace cmtorus::lattice
