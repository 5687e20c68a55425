#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lagrel/error.hpp"
#include "lagrel/scalar.hpp"

namespace lagrel {

template <class F>
using Vector = std::vector<F>;

// Dense row-major matrix over a field F.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols_if_empty = 0) {
        std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, ErrorKind::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix column(const Vector<F>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    static Matrix diagonal(const Vector<F>& v) {
        Matrix m(v.size(), v.size());
        for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector<F> row(std::size_t i) const {
        return Vector<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    Vector<F> col(std::size_t j) const {
        Vector<F> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const F& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix conj() const {
        Matrix c(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) c.data_[k] = data_[k].conj();
        return c;
    }

    Matrix adjoint() const { return conj().transpose(); }

    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix m(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
        return m;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "matrix sum shape");
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "matrix difference shape");
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "matrix product shape");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (!bkj.is_zero()) m(i, j) += aik * bkj;
                }
            }
        return m;
    }

    friend Vector<F> operator*(const Matrix& a, const Vector<F>& v) {
        require(a.cols_ == v.size(), ErrorKind::DimensionMismatch, "matrix-vector shape");
        Vector<F> out(a.rows_, F(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
        return out;
    }

    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!a.data_[k].is_zero()) m.data_[k] = s * a.data_[k];
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    require(a.rows() == b.rows(), ErrorKind::DimensionMismatch, "hstack row counts differ");
    Matrix<F> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    require(a.cols() == b.cols(), ErrorKind::DimensionMismatch, "vstack column counts differ");
    Matrix<F> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

template <class F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// Block matrix from a grid of equally-shaped-per-row/column blocks.
template <class F>
Matrix<F> block_matrix(const std::vector<std::vector<Matrix<F>>>& grid) {
    std::size_t rows = 0, cols = 0;
    for (const auto& r : grid) rows += r.empty() ? 0 : r.front().rows();
    if (!grid.empty())
        for (const auto& b : grid.front()) cols += b.cols();
    Matrix<F> m(rows, cols);
    std::size_t r0 = 0;
    for (const auto& r : grid) {
        std::size_t c0 = 0;
        for (const auto& b : r) {
            require(b.rows() == r.front().rows(), ErrorKind::DimensionMismatch, "block rows differ");
            m.set_block(r0, c0, b);
            c0 += b.cols();
        }
        require(c0 == cols, ErrorKind::DimensionMismatch, "block columns differ");
        r0 += r.empty() ? 0 : r.front().rows();
    }
    return m;
}

template <class F>
Vector<F> concat(const Vector<F>& a, const Vector<F>& b) {
    Vector<F> v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

template <class F>
Vector<F> operator+(const Vector<F>& a, const Vector<F>& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector sum length");
    Vector<F> v = a;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
    return v;
}

template <class F>
Vector<F> operator-(const Vector<F>& a, const Vector<F>& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector difference length");
    Vector<F> v = a;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
    return v;
}

template <class F>
Vector<F> operator-(const Vector<F>& a) {
    Vector<F> v = a;
    for (auto& x : v) x = -x;
    return v;
}

template <class F>
Matrix<F> symplectic_form(std::size_t n) {
    Matrix<F> m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, n + i) = F(1);
        m(n + i, i) = F(-1);
    }
    return m;
}

// Text format: rows separated by ';', entries by ','.
std::string matrix_to_string(const Matrix<Q>& m);
Matrix<Q> parse_matrix(std::string_view text);
std::string vector_to_string(const Vector<Q>& v);
Vector<Q> parse_vector(std::string_view text);

}  // namespace lagrel
