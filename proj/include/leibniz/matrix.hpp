#ifndef LEIBNIZ_MATRIX_HPP
#define LEIBNIZ_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/field.hpp"

namespace leibniz {

template <ExactField F>
using Vector = std::vector<F>;

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
public:
    using value_type = F;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw ShapeError("matrix data length does not match its shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vector<F>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw ShapeError("ragged row list");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix diagonal(std::span<const F> entries) {
        Matrix m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<F> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    Vector<F> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

    const std::vector<F>& data() const { return data_; }

    bool is_zero_matrix() const {
        for (const F& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const F& s) {
        for (F& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
    friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <ExactField F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
    Matrix<F> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const F& aik = a(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <ExactField F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
    return matmul(a, b);
}

template <ExactField F>
Matrix<F> matpow(const Matrix<F>& m, std::size_t k) {
    if (!m.is_square()) throw ShapeError("matpow: matrix is not square");
    Matrix<F> result = Matrix<F>::identity(m.rows());
    Matrix<F> base = m;
    while (k) {
        if (k & 1U) result = matmul(result, base);
        k >>= 1U;
        if (k) base = matmul(base, base);
    }
    return result;
}

/// Row vector times matrix: the coordinates of x*M.
template <ExactField F>
Vector<F> left_multiply(std::span<const F> x, const Matrix<F>& m) {
    if (x.size() != m.rows()) throw ShapeError("left_multiply: length mismatch");
    Vector<F> y(m.cols(), F(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) y[j] += x[i] * m(i, j);
    }
    return y;
}

/// Commutator AB - BA.
template <ExactField F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
    return matmul(a, b) - matmul(b, a);
}

template <ExactField F>
bool is_zero_vector(std::span<const F> v) {
    for (const F& x : v)
        if (!is_zero(x)) return false;
    return true;
}

}  // namespace leibniz

#endif  // LEIBNIZ_MATRIX_HPP
