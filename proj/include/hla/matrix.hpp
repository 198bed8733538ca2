#pragma once

#include "hla/scalar.hpp"

#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hla {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v = zero_vector(n);
    v[i] = 1;
    return v;
}

inline bool is_zero(std::span<const Scalar> v)
{
    for (const auto& s : v)
        if (!is_zero(s)) return false;
    return true;
}

inline void axpy(const Scalar& a, std::span<const Scalar> x, std::span<Scalar> y)
{
    assert(x.size() == y.size());
    if (is_zero(a)) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i])) y[i] += a * x[i];
}

inline Vector operator+(Vector a, const Vector& b)
{
    axpy(Scalar(1), b, a);
    return a;
}

inline Vector operator-(Vector a, const Vector& b)
{
    axpy(Scalar(-1), b, a);
    return a;
}

inline Vector operator*(const Scalar& s, Vector v)
{
    for (auto& x : v) x *= s;
    return v;
}

/// Dense row-major rational matrix. A matrix used as a linear map acts on
/// column vectors: column j holds the image of the j-th basis vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count does not match shape");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("Matrix::from_columns: ragged columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j)
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const Scalar& operator()(std::size_t i, std::size_t j) const
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    Vector row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

    Vector column(std::size_t j) const
    {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_column(std::size_t j, const Vector& v)
    {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    const std::vector<Scalar>& entries() const { return data_; }

    bool is_zero() const
    {
        for (const auto& s : data_)
            if (!hla::is_zero(s)) return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vector operator*(std::span<const Scalar> v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("Matrix * vector: dimension mismatch");
        Vector out = zero_vector(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Scalar acc = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!hla::is_zero(v[j]) && !hla::is_zero((*this)(i, j))) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix * Matrix: dimension mismatch");
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& a = (*this)(i, k);
                if (hla::is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (!hla::is_zero(o(k, j))) out(i, j) += a * o(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix + Matrix: shape mismatch");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix - Matrix: shape mismatch");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Block-diagonal sum diag(a, b).
inline Matrix block_diagonal(const Matrix& a, const Matrix& b)
{
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

inline Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

} // namespace hla
