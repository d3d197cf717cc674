#include "cmtorus/lattice/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "cmtorus/error.hpp"

namespace cmtorus::lattice {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionMismatch("IntMatrix: ragged initializer list");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw DimensionMismatch("IntMatrix::from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionMismatch("IntMatrix::from_rows: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

Integer& IntMatrix::at(std::size_t i, std::size_t j)
{
    if (i >= rows_ || j >= cols_)
        throw DimensionMismatch("IntMatrix::at: index out of range");
    return (*this)(i, j);
}

const Integer& IntMatrix::at(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_)
        throw DimensionMismatch("IntMatrix::at: index out of range");
    return (*this)(i, j);
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, const IntVector& v)
{
    if (v.size() != rows_ || j >= cols_)
        throw DimensionMismatch("IntMatrix::set_column: shape mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::columns_range(std::size_t first, std::size_t last) const
{
    if (first > last || last > cols_)
        throw DimensionMismatch("IntMatrix::columns_range: bad range");
    IntMatrix m(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = first; j < last; ++j)
            m(i, j - first) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t last) const
{
    if (first > last || last > rows_)
        throw DimensionMismatch("IntMatrix::rows_range: bad range");
    IntMatrix m(last - first, cols_);
    for (std::size_t i = first; i < last; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(i - first, j) = (*this)(i, j);
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (sgn(k) == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(src, j)) != 0)
            (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (sgn(k) == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        if (sgn((*this)(i, src)) != 0)
            (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = -(*this)(i, j);
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("IntMatrix +: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("IntMatrix -: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& k)
{
    for (auto& x : data_)
        x *= k;
    return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("IntMatrix *: inner dimensions differ");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v)
{
    if (a.cols_ != v.size())
        throw DimensionMismatch("IntMatrix * vector: dimension mismatch");
    IntVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (sgn(v[j]) != 0)
                r[i] += a(i, j) * v[j];
    return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("hstack: row counts differ");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("vstack: column counts differ");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntMatrix m(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Integer determinant(const IntMatrix& m)
{
    if (!m.is_square())
        throw DimensionMismatch("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_zero(const IntVector& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

}  // namespace cmtorus::lattice
