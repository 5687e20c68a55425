#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "lagrel/linalg.hpp"

namespace lagrel {

// Affine subspace of F^(dom+cod), possibly empty, stored as canonical constraints C v = r
// with C in reduced row-echelon form and no zero rows.
template <class F>
class AffineRelation {
public:
    AffineRelation() = default;

    static AffineRelation from_constraints(std::size_t dom, std::size_t cod, const Matrix<F>& c, const Vector<F>& rhs) {
        require(c.cols() == dom + cod, ErrorKind::DimensionMismatch, "constraint width differs from dom+cod");
        require(c.rows() == rhs.size(), ErrorKind::DimensionMismatch, "constraint rows differ from rhs length");
        AffineRelation r;
        r.dom_ = dom;
        r.cod_ = cod;
        r.canonicalize(c, rhs);
        return r;
    }

    // The affine subspace point + span(columns of basis).
    static AffineRelation from_image(std::size_t dom, std::size_t cod, const Matrix<F>& basis, const Vector<F>& point) {
        require(basis.rows() == dom + cod && point.size() == dom + cod, ErrorKind::DimensionMismatch,
                "image basis shape");
        Matrix<F> c = kernel(basis.transpose()).transpose();
        return from_constraints(dom, cod, c, c * point);
    }

    static AffineRelation empty(std::size_t dom, std::size_t cod) {
        AffineRelation r;
        r.dom_ = dom;
        r.cod_ = cod;
        r.empty_ = true;
        r.constraints_ = Matrix<F>(0, dom + cod);
        return r;
    }

    static AffineRelation total(std::size_t dom, std::size_t cod) {
        return from_constraints(dom, cod, Matrix<F>(0, dom + cod), {});
    }

    static AffineRelation identity(std::size_t n) {
        Matrix<F> c(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            c(i, i) = F(1);
            c(i, n + i) = F(-1);
        }
        return from_constraints(n, n, c, Vector<F>(n, F(0)));
    }

    // Swap of an n-block and an m-block: (a, b) -> (b, a).
    static AffineRelation symmetry(std::size_t n, std::size_t m) {
        std::vector<std::size_t> perm;
        for (std::size_t j = 0; j < m; ++j) perm.push_back(n + j);
        for (std::size_t j = 0; j < n; ++j) perm.push_back(j);
        return permutation(perm);
    }

    // The relation (v) -> (v[perm[0]], v[perm[1]], ...).
    static AffineRelation permutation(const std::vector<std::size_t>& perm) {
        const std::size_t n = perm.size();
        Matrix<F> c(n, 2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            c(k, n + k) = F(1);
            c(k, perm[k]) = F(-1);
        }
        return from_constraints(n, n, c, Vector<F>(n, F(0)));
    }

    // Plain diagonal cup 0 -> 2n: {(a, a)}.
    static AffineRelation cup(std::size_t n) { return identity(n).reshape(0); }
    static AffineRelation cap(std::size_t n) { return identity(n).reshape(2 * n); }

    static AffineRelation point(const Vector<F>& v) {
        return from_constraints(0, v.size(), Matrix<F>::identity(v.size()), v);
    }

    std::size_t dom() const { return dom_; }
    std::size_t cod() const { return cod_; }
    std::size_t width() const { return dom_ + cod_; }
    bool is_empty() const { return empty_; }
    const Matrix<F>& constraints() const { return constraints_; }
    const Vector<F>& rhs() const { return rhs_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Particular solution with every free coordinate set to zero.
    Vector<F> shift() const {
        require(!empty_, ErrorKind::EmptyRelation, "empty relation has no points");
        Vector<F> v(width(), F(0));
        for (std::size_t i = 0; i < pivots_.size(); ++i) v[pivots_[i]] = rhs_[i];
        return v;
    }

    Matrix<F> linear_basis() const { return kernel(constraints_); }
    std::size_t dimension() const { return empty_ ? 0 : width() - constraints_.rows(); }

    bool contains(const Vector<F>& v) const {
        require(v.size() == width(), ErrorKind::DimensionMismatch, "point dimension");
        if (empty_) return false;
        return constraints_ * v == rhs_;
    }

    AffineRelation reshape(std::size_t new_dom) const {
        require(new_dom <= width(), ErrorKind::DimensionMismatch, "reshape beyond width");
        AffineRelation r = *this;
        r.cod_ = width() - new_dom;
        r.dom_ = new_dom;
        return r;
    }

    // New coordinate k is old coordinate perm[k].
    AffineRelation permute_coordinates(const std::vector<std::size_t>& perm, std::size_t new_dom) const {
        require(perm.size() == width(), ErrorKind::DimensionMismatch, "permutation length");
        if (empty_) return empty(new_dom, width() - new_dom);
        std::vector<std::size_t> rows(constraints_.rows());
        std::iota(rows.begin(), rows.end(), 0);
        return from_constraints(new_dom, width() - new_dom, constraints_.submatrix(rows, perm), rhs_);
    }

    AffineRelation with_constraints(const Matrix<F>& extra, const Vector<F>& extra_rhs) const {
        require(extra.cols() == width(), ErrorKind::DimensionMismatch, "extra constraint width");
        if (empty_) return *this;
        return from_constraints(dom_, cod_, vstack(constraints_, extra), concat(rhs_, extra_rhs));
    }

    // Existentially quantify the listed coordinates away.
    AffineRelation eliminate(const std::vector<std::size_t>& coords, std::size_t new_dom) const {
        const std::size_t w = width();
        std::vector<bool> gone(w, false);
        for (auto c : coords) gone[c] = true;
        std::vector<std::size_t> order(coords.begin(), coords.end()), kept;
        for (std::size_t j = 0; j < w; ++j)
            if (!gone[j]) kept.push_back(j);
        order.insert(order.end(), kept.begin(), kept.end());
        require(new_dom <= kept.size(), ErrorKind::DimensionMismatch, "elimination domain");
        if (empty_) return empty(new_dom, kept.size() - new_dom);
        return project_tail(constraints_, rhs_, order, coords.size(), new_dom);
    }

    // Relational composition: this : n -> m followed by s : m -> k.
    AffineRelation compose(const AffineRelation& s) const {
        require(cod_ == s.dom_, ErrorKind::DimensionMismatch, "composition boundary mismatch");
        const std::size_t n = dom_, m = cod_, k = s.cod_;
        if (empty_ || s.empty_) return empty(n, k);
        // Variables ordered (b, a, c) so that b is eliminated first.
        const std::size_t w = m + n + k;
        const std::size_t r1 = constraints_.rows(), r2 = s.constraints_.rows();
        Matrix<F> sys(r1 + r2, w);
        Vector<F> rhs(r1 + r2);
        for (std::size_t i = 0; i < r1; ++i) {
            for (std::size_t j = 0; j < n; ++j) sys(i, m + j) = constraints_(i, j);
            for (std::size_t j = 0; j < m; ++j) sys(i, j) = constraints_(i, n + j);
            rhs[i] = rhs_[i];
        }
        for (std::size_t i = 0; i < r2; ++i) {
            for (std::size_t j = 0; j < m; ++j) sys(r1 + i, j) = s.constraints_(i, j);
            for (std::size_t j = 0; j < k; ++j) sys(r1 + i, m + n + j) = s.constraints_(i, m + j);
            rhs[r1 + i] = s.rhs_[i];
        }
        std::vector<std::size_t> order(w);
        std::iota(order.begin(), order.end(), 0);
        return project_tail(sys, rhs, order, m, n);
    }

    // Monoidal product with coordinates (a_this, a_s, b_this, b_s).
    AffineRelation tensor(const AffineRelation& s) const {
        const std::size_t n1 = dom_, m1 = cod_, n2 = s.dom_, m2 = s.cod_;
        if (empty_ || s.empty_) return empty(n1 + n2, m1 + m2);
        const std::size_t r1 = constraints_.rows(), r2 = s.constraints_.rows();
        Matrix<F> c(r1 + r2, n1 + n2 + m1 + m2);
        for (std::size_t i = 0; i < r1; ++i) {
            for (std::size_t j = 0; j < n1; ++j) c(i, j) = constraints_(i, j);
            for (std::size_t j = 0; j < m1; ++j) c(i, n1 + n2 + j) = constraints_(i, n1 + j);
        }
        for (std::size_t i = 0; i < r2; ++i) {
            for (std::size_t j = 0; j < n2; ++j) c(r1 + i, n1 + j) = s.constraints_(i, j);
            for (std::size_t j = 0; j < m2; ++j) c(r1 + i, n1 + n2 + m1 + j) = s.constraints_(i, n2 + j);
        }
        return from_constraints(n1 + n2, m1 + m2, c, concat(rhs_, s.rhs_));
    }

    AffineRelation converse() const {
        std::vector<std::size_t> perm;
        for (std::size_t j = 0; j < cod_; ++j) perm.push_back(dom_ + j);
        for (std::size_t j = 0; j < dom_; ++j) perm.push_back(j);
        return permute_coordinates(perm, cod_);
    }

    std::string str() const {
        std::string head = std::to_string(dom_) + "->" + std::to_string(cod_);
        if (empty_) return head + " EMPTY";
        std::string out = head;
        for (std::size_t i = 0; i < constraints_.rows(); ++i) {
            out += "\n[";
            for (std::size_t j = 0; j < constraints_.cols(); ++j) {
                if (j) out += " ";
                out += constraints_(i, j).str();
            }
            out += " | " + rhs_[i].str() + "]";
        }
        return out;
    }

    friend bool operator==(const AffineRelation& a, const AffineRelation& b) {
        if (a.dom_ != b.dom_ || a.cod_ != b.cod_ || a.empty_ != b.empty_) return false;
        return a.empty_ || (a.constraints_ == b.constraints_ && a.rhs_ == b.rhs_);
    }

private:
    void canonicalize(const Matrix<F>& c, const Vector<F>& rhs) {
        const std::size_t w = c.cols();
        auto rr = rref(hstack(c, Matrix<F>::column(rhs)));
        empty_ = false;
        for (auto p : rr.pivots)
            if (p == w) empty_ = true;
        if (empty_) {
            constraints_ = Matrix<F>(0, w);
            rhs_.clear();
            pivots_.clear();
            return;
        }
        const std::size_t r = rr.rank();
        constraints_ = rr.reduced.block(0, 0, r, w);
        rhs_ = Vector<F>(r);
        for (std::size_t i = 0; i < r; ++i) rhs_[i] = rr.reduced(i, w);
        pivots_ = rr.pivots;
    }

    // Columns of sys are taken in the given order; the first `drop` of them are projected out.
    static AffineRelation project_tail(const Matrix<F>& sys, const Vector<F>& rhs, const std::vector<std::size_t>& order,
                                       std::size_t drop, std::size_t new_dom) {
        std::vector<std::size_t> rows(sys.rows());
        std::iota(rows.begin(), rows.end(), 0);
        Matrix<F> ordered = sys.submatrix(rows, order);
        const std::size_t w = order.size();
        auto rr = rref(hstack(ordered, Matrix<F>::column(rhs)));
        std::vector<std::vector<F>> kept_rows;
        Vector<F> kept_rhs;
        for (std::size_t i = 0; i < rr.rank(); ++i) {
            const std::size_t p = rr.pivots[i];
            if (p == w) return empty(new_dom, w - drop - new_dom);
            if (p < drop) continue;
            std::vector<F> row(w - drop);
            for (std::size_t j = drop; j < w; ++j) row[j - drop] = rr.reduced(i, j);
            kept_rows.push_back(std::move(row));
            kept_rhs.push_back(rr.reduced(i, w));
        }
        return from_constraints(new_dom, w - drop - new_dom, Matrix<F>::from_rows(kept_rows, w - drop), kept_rhs);
    }

    std::size_t dom_ = 0;
    std::size_t cod_ = 0;
    bool empty_ = false;
    Matrix<F> constraints_;
    Vector<F> rhs_;
    std::vector<std::size_t> pivots_;
};

using Relation = AffineRelation<Q>;

// Generators of graphical affine algebra over Q(i).
enum class GaaKind { Grey, White, Scalar };

// Grey: copy (all legs equal). White: sum of all legs equals the phase. Scalar: {(u, c u)}.
Relation gaa_generator(GaaKind kind, std::size_t in, std::size_t out, const Q& phase);
Relation gaa_generator(const std::string& kind, std::size_t in, std::size_t out, const Q& phase);
Relation scalar_mult(const Q& c);

}  // namespace lagrel
