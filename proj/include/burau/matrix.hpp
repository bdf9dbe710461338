#pragma once

#include "burau/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace burau {

/// Dense row-major matrix over a commutative ring R.
template <typename R>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, R(0))
    {
        if (rows < 0 || cols < 0)
            throw DimensionMismatch("Matrix: negative dimension");
    }

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = R(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    R& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const R& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<R>& data() const { return data_; }
    std::vector<R>& data() { return data_; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto& x : r.data_)
            x = -x;
        return r;
    }

    Matrix& operator+=(const Matrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("Matrix product: " + a.shape() + " * " + b.shape());
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const R& aik = a(i, k);
                if (aik == R(0))
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    template <typename S>
    Matrix scaled(const S& c) const
    {
        Matrix r = *this;
        for (auto& x : r.data_)
            x = x * c;
        return r;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!(x == R(0)))
                return false;
        return true;
    }

    R trace() const
    {
        R t(0);
        for (int i = 0; i < std::min(rows_, cols_); ++i)
            t += (*this)(i, i);
        return t;
    }

    template <typename F>
    auto map(F&& f) const
    {
        using T = decltype(f(std::declval<const R&>()));
        Matrix<T> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(i, j) = f((*this)(i, j));
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("Matrix shape mismatch: " + shape() + " vs " + o.shape());
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<R> data_;
};

/// Matrix commutator AB - BA.
template <typename R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b)
{
    return a * b - b * a;
}

}  // namespace burau
