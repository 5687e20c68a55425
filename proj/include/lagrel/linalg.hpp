#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lagrel/matrix.hpp"

namespace lagrel {

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

template <class F>
void require_exact(const char* what) {
    if constexpr (!FieldTraits<F>::exact) fail(ErrorKind::BackendMismatch, std::string(what) + " needs the exact backend");
}

// Reduced row-echelon form with unit pivots; zero rows are kept at the bottom.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    require_exact<F>("rref");
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        F inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = c + 1; j < cols; ++j)
            if (!m(r, j).is_zero()) nz.push_back(j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F factor = m(i, c);
            m(i, c) = F(0);
            for (std::size_t j : nz) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank();
}

// Basis of the null space: one column per free variable, free entry 1.
template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix<F> k(m.cols(), free.size());
    for (std::size_t t = 0; t < free.size(); ++t) {
        k(free[t], t) = F(1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) k(rr.pivots[i], t) = -rr.reduced(i, free[t]);
    }
    return k;
}

// Basis of the column space taken from the pivot columns of m.
template <class F>
Matrix<F> image(const Matrix<F>& m) {
    auto rr = rref(m);
    std::vector<std::size_t> all(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) all[i] = i;
    return m.submatrix(all, rr.pivots);
}

// A particular solution of A x = b with free variables set to zero, or nothing if inconsistent.
template <class F>
std::optional<Vector<F>> solve_affine(const Matrix<F>& a, const Vector<F>& b) {
    require(a.rows() == b.size(), ErrorKind::DimensionMismatch, "solve_affine right-hand side length");
    auto rr = rref(hstack(a, Matrix<F>::column(b)));
    Vector<F> x(a.cols(), F(0));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == a.cols()) return std::nullopt;
        x[rr.pivots[i]] = rr.reduced(i, a.cols());
    }
    return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    require(m.is_square(), ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    auto rr = rref(hstack(m, Matrix<F>::identity(n)));
    if (rr.rank() < n || (n > 0 && rr.pivots[n - 1] != n - 1))
        fail(ErrorKind::SingularMatrix, "matrix is not invertible");
    return rr.reduced.block(0, n, n, n);
}

template <class F>
F determinant(Matrix<F> m) {
    require_exact<F>("determinant");
    require(m.is_square(), ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return F(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        F inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            F factor = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= factor * m(c, j);
        }
    }
    return det;
}

// Moore-Penrose pseudo-inverse via the full-rank factorization M = F G,
// F the pivot columns of M and G the nonzero rows of rref(M).
template <class F>
Matrix<F> pinv(const Matrix<F>& m) {
    auto rr = rref(m);
    const std::size_t r = rr.rank();
    if (r == 0) return Matrix<F>(m.cols(), m.rows());
    std::vector<std::size_t> all_rows(m.rows()), top(r), all_cols(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
    for (std::size_t i = 0; i < r; ++i) top[i] = i;
    for (std::size_t j = 0; j < m.cols(); ++j) all_cols[j] = j;
    Matrix<F> f = m.submatrix(all_rows, rr.pivots);
    Matrix<F> g = rr.reduced.submatrix(top, all_cols);
    Matrix<F> fa = f.adjoint(), ga = g.adjoint();
    return ga * inverse(g * ga) * inverse(fa * f) * fa;
}

template <class F>
bool is_hermitian(const Matrix<F>& m) {
    return m.is_square() && m == m.adjoint();
}

template <class F>
bool is_symmetric(const Matrix<F>& m) {
    return m.is_square() && m == m.transpose();
}

// Exact congruence factorization M = sum_j d_j l_j l_j^dagger of a Hermitian matrix over Q(i).
struct LdlResult {
    bool psd = false;
    bool pd = false;
    std::vector<Rational> pivots;
    std::vector<Vector<Q>> columns;
};

LdlResult ldl_hermitian(const Matrix<Q>& m);
bool is_psd(const Matrix<Q>& m);
bool is_pd(const Matrix<Q>& m);

// Generalised Schur complement with the measured block first: Sigma is partitioned as
// [[S_nn, S_nm], [S_mn, S_mm]] with n = measured.
std::pair<Matrix<Q>, Vector<Q>> schur_project(const Matrix<Q>& sigma, std::size_t measured, const Matrix<Q>& delta,
                                              const Vector<Q>& mu, const Vector<Q>& nu);

bool is_real(const Matrix<Q>& m);
bool is_real(const Vector<Q>& v);
Matrix<Q> real_part(const Matrix<Q>& m);
Matrix<Q> imag_part(const Matrix<Q>& m);
Vector<Q> real_part(const Vector<Q>& v);
Vector<Q> imag_part(const Vector<Q>& v);

}  // namespace lagrel
