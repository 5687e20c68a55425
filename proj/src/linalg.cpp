#include "lagrel/linalg.hpp"

#include <sstream>

namespace lagrel {

std::string matrix_to_string(const Matrix<Q>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ";";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += m(i, j).str();
        }
    }
    return out;
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r\n") == std::string_view::npos; }

}  // namespace

Matrix<Q> parse_matrix(std::string_view text) {
    if (blank(text)) return Matrix<Q>();
    std::vector<std::vector<Q>> rows;
    for (const auto& row : split(text, ';')) {
        std::vector<Q> entries;
        for (const auto& e : split(row, ',')) entries.push_back(Q::parse(e));
        if (!rows.empty() && rows.front().size() != entries.size())
            fail(ErrorKind::ParseError, "matrix rows have different lengths");
        rows.push_back(std::move(entries));
    }
    return Matrix<Q>::from_rows(rows);
}

std::string vector_to_string(const Vector<Q>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out;
}

Vector<Q> parse_vector(std::string_view text) {
    Vector<Q> v;
    if (blank(text)) return v;
    for (const auto& e : split(text, ',')) v.push_back(Q::parse(e));
    return v;
}

LdlResult ldl_hermitian(const Matrix<Q>& m) {
    require(is_hermitian(m), ErrorKind::NotSymmetric, "matrix is not Hermitian");
    const std::size_t n = m.rows();
    Matrix<Q> w = m;
    std::vector<bool> active(n, true);
    LdlResult out;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            int s = w(i, i).re().sign();
            if (s < 0) return out;
            if (s > 0 && pivot == n) pivot = i;
        }
        if (pivot == n) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (active[i] && active[j] && !w(i, j).is_zero()) return out;
            out.psd = true;
            return out;
        }
        Rational d = w(pivot, pivot).re();
        Vector<Q> a(n, Q(0));
        for (std::size_t i = 0; i < n; ++i)
            if (active[i]) a[i] = w(i, pivot);
        Q dinv = Q(d.inverse());
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || a[i].is_zero()) continue;
            Q ai = a[i] * dinv;
            for (std::size_t j = 0; j < n; ++j)
                if (active[j] && !a[j].is_zero()) w(i, j) -= ai * a[j].conj();
        }
        Vector<Q> l(n, Q(0));
        for (std::size_t i = 0; i < n; ++i) l[i] = a[i] * dinv;
        active[pivot] = false;
        out.pivots.push_back(d);
        out.columns.push_back(std::move(l));
    }
    out.psd = true;
    out.pd = true;
    return out;
}

bool is_psd(const Matrix<Q>& m) { return ldl_hermitian(m).psd; }

bool is_pd(const Matrix<Q>& m) { return ldl_hermitian(m).pd; }

std::pair<Matrix<Q>, Vector<Q>> schur_project(const Matrix<Q>& sigma, std::size_t measured, const Matrix<Q>& delta,
                                              const Vector<Q>& mu, const Vector<Q>& nu) {
    require(sigma.is_square() && measured <= sigma.rows(), ErrorKind::DimensionMismatch, "covariance partition");
    require(delta.rows() == measured && delta.cols() == measured, ErrorKind::DimensionMismatch,
            "effect covariance size");
    require(mu.size() == sigma.rows() && nu.size() == measured, ErrorKind::DimensionMismatch, "mean sizes");
    const std::size_t n = measured, k = sigma.rows() - measured;
    Matrix<Q> snn = sigma.block(0, 0, n, n);
    Matrix<Q> smn = sigma.block(n, 0, k, n);
    Matrix<Q> smm = sigma.block(n, n, k, k);
    Matrix<Q> p = pinv(snn + delta);
    Vector<Q> mun(mu.begin(), mu.begin() + n), mum(mu.begin() + n, mu.end());
    Vector<Q> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = mun[i] - nu[i];
    Matrix<Q> gain = smn * p;
    Matrix<Q> cov = smm - gain * smn.transpose();
    Vector<Q> shift = gain * diff;
    for (std::size_t i = 0; i < k; ++i) mum[i] -= shift[i];
    return {cov, mum};
}

bool is_real(const Matrix<Q>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_real()) return false;
    return true;
}

bool is_real(const Vector<Q>& v) {
    for (const auto& x : v)
        if (!x.is_real()) return false;
    return true;
}

Matrix<Q> real_part(const Matrix<Q>& m) {
    Matrix<Q> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Q(m(i, j).re());
    return r;
}

Matrix<Q> imag_part(const Matrix<Q>& m) {
    Matrix<Q> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Q(m(i, j).im());
    return r;
}

Vector<Q> real_part(const Vector<Q>& v) {
    Vector<Q> r;
    for (const auto& x : v) r.push_back(Q(x.re()));
    return r;
}

Vector<Q> imag_part(const Vector<Q>& v) {
    Vector<Q> r;
    for (const auto& x : v) r.push_back(Q(x.im()));
    return r;
}

}  // namespace lagrel
