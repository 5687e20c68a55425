#include "lagrel/lagrangian.hpp"

#include <numeric>

namespace lagrel {

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> v(to - from);
    std::iota(v.begin(), v.end(), from);
    return v;
}

}  // namespace

Relation signed_permute(const Relation& r, const std::vector<std::size_t>& perm, const std::vector<int>& signs,
                        std::size_t new_dom) {
    require(perm.size() == r.width() && signs.size() == perm.size(), ErrorKind::DimensionMismatch,
            "signed permutation length");
    if (r.is_empty()) return Relation::empty(new_dom, r.width() - new_dom);
    const Matrix<Q>& c = r.constraints();
    Matrix<Q> out(c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t k = 0; k < perm.size(); ++k) out(i, k) = signs[k] < 0 ? -c(i, perm[k]) : c(i, perm[k]);
    return Relation::from_constraints(new_dom, r.width() - new_dom, out, r.rhs());
}

Matrix<Q> twisted_form(std::size_t in, std::size_t out) {
    return direct_sum(-symplectic_form<Q>(in), symplectic_form<Q>(out));
}

bool is_lagrangian(const Relation& r) {
    if (r.dom() % 2 != 0 || r.cod() % 2 != 0) return false;
    if (r.is_empty()) return true;
    const std::size_t n = r.dom() / 2, m = r.cod() / 2;
    Matrix<Q> k = r.linear_basis();
    if (k.cols() != n + m) return false;
    return (k.transpose() * twisted_form(n, m) * k).is_zero();
}

LagrangianRelation LagrangianRelation::make(std::size_t in, std::size_t out, const Relation& r) {
    require(r.dom() == 2 * in && r.cod() == 2 * out, ErrorKind::DimensionMismatch, "relation width is not 2(n+m)");
    require(is_lagrangian(r), ErrorKind::NotLagrangian, "subspace is not Lagrangian for the twisted form");
    return LagrangianRelation(in, out, r);
}

LagrangianRelation LagrangianRelation::from_constraints(std::size_t in, std::size_t out, const Matrix<Q>& g,
                                                        const Vector<Q>& rhs) {
    return make(in, out, Relation::from_constraints(2 * in, 2 * out, g, rhs));
}

LagrangianRelation LagrangianRelation::trusted(std::size_t in, std::size_t out, Relation r) {
    return LagrangianRelation(in, out, std::move(r));
}

LagrangianRelation LagrangianRelation::empty(std::size_t in, std::size_t out) {
    return LagrangianRelation(in, out, Relation::empty(2 * in, 2 * out));
}

LagrangianRelation LagrangianRelation::identity(std::size_t n) {
    return LagrangianRelation(n, n, Relation::identity(2 * n));
}

LagrangianRelation LagrangianRelation::mode_permutation(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    Matrix<Q> c(2 * n, 4 * n);
    for (std::size_t k = 0; k < n; ++k) {
        c(k, 2 * n + k) = Q(1);
        c(k, perm[k]) = Q(-1);
        c(n + k, 3 * n + k) = Q(1);
        c(n + k, n + perm[k]) = Q(-1);
    }
    return LagrangianRelation(n, n, Relation::from_constraints(2 * n, 2 * n, c, Vector<Q>(2 * n, Q(0))));
}

LagrangianRelation LagrangianRelation::symmetry(std::size_t n, std::size_t m) {
    std::vector<std::size_t> perm;
    for (std::size_t j = 0; j < m; ++j) perm.push_back(n + j);
    for (std::size_t j = 0; j < n; ++j) perm.push_back(j);
    return mode_permutation(perm);
}

LagrangianRelation LagrangianRelation::cup(std::size_t n) {
    Matrix<Q> c(2 * n, 4 * n);
    for (std::size_t k = 0; k < n; ++k) {
        c(k, k) = Q(1);
        c(k, n + k) = Q(1);
        c(n + k, 2 * n + k) = Q(1);
        c(n + k, 3 * n + k) = Q(-1);
    }
    return LagrangianRelation(0, 2 * n, Relation::from_constraints(0, 4 * n, c, Vector<Q>(2 * n, Q(0))));
}

LagrangianRelation LagrangianRelation::cap(std::size_t n) { return cup(n).converse(); }

LagrangianRelation LagrangianRelation::compose(const LagrangianRelation& next) const {
    require(out_ == next.in_, ErrorKind::DimensionMismatch, "composition boundary mismatch");
    return LagrangianRelation(in_, next.out_, rel_.compose(next.rel_));
}

LagrangianRelation LagrangianRelation::tensor(const LagrangianRelation& other) const {
    const std::size_t n1 = in_, n2 = other.in_, m1 = out_, m2 = other.out_;
    Relation t = rel_.tensor(other.rel_);
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < n1; ++k) perm.push_back(k);
    for (std::size_t k = 0; k < n2; ++k) perm.push_back(2 * n1 + k);
    for (std::size_t k = 0; k < n1; ++k) perm.push_back(n1 + k);
    for (std::size_t k = 0; k < n2; ++k) perm.push_back(2 * n1 + n2 + k);
    const std::size_t base = 2 * (n1 + n2);
    for (std::size_t k = 0; k < m1; ++k) perm.push_back(base + k);
    for (std::size_t k = 0; k < m2; ++k) perm.push_back(base + 2 * m1 + k);
    for (std::size_t k = 0; k < m1; ++k) perm.push_back(base + m1 + k);
    for (std::size_t k = 0; k < m2; ++k) perm.push_back(base + 2 * m1 + m2 + k);
    return LagrangianRelation(n1 + n2, m1 + m2, t.permute_coordinates(perm, 2 * (n1 + n2)));
}

LagrangianRelation LagrangianRelation::converse() const { return LagrangianRelation(out_, in_, rel_.converse()); }

LagrangianRelation LagrangianRelation::conjugate() const {
    if (rel_.is_empty()) return *this;
    Vector<Q> rhs;
    for (const auto& x : rel_.rhs()) rhs.push_back(x.conj());
    return LagrangianRelation(in_, out_, Relation::from_constraints(rel_.dom(), rel_.cod(), rel_.constraints().conj(), rhs));
}

LagrangianRelation name(const LagrangianRelation& r) {
    const std::size_t n = r.in(), m = r.out();
    std::vector<std::size_t> perm;
    std::vector<int> signs;
    for (std::size_t k = 0; k < n; ++k) perm.push_back(k), signs.push_back(-1);
    for (std::size_t k = 0; k < m; ++k) perm.push_back(2 * n + k), signs.push_back(1);
    for (std::size_t k = 0; k < n; ++k) perm.push_back(n + k), signs.push_back(1);
    for (std::size_t k = 0; k < m; ++k) perm.push_back(2 * n + m + k), signs.push_back(1);
    return LagrangianRelation::trusted(0, n + m, signed_permute(r.affine(), perm, signs, 0));
}

LagrangianRelation unname(const LagrangianRelation& state, std::size_t in) {
    require(state.in() == 0, ErrorKind::NotAState, "unname expects a state");
    require(in <= state.out(), ErrorKind::DimensionMismatch, "more inputs than modes");
    const std::size_t n = in, m = state.out() - in, total = state.out();
    std::vector<std::size_t> perm;
    std::vector<int> signs;
    for (std::size_t k = 0; k < n; ++k) perm.push_back(k), signs.push_back(-1);
    for (std::size_t k = 0; k < n; ++k) perm.push_back(total + k), signs.push_back(1);
    for (std::size_t k = 0; k < m; ++k) perm.push_back(n + k), signs.push_back(1);
    for (std::size_t k = 0; k < m; ++k) perm.push_back(total + n + k), signs.push_back(1);
    return LagrangianRelation::trusted(n, m, signed_permute(state.affine(), perm, signs, 2 * n));
}

std::vector<std::size_t> APForm::permutation() const {
    std::vector<std::size_t> p = vertices;
    p.insert(p.end(), leaves.begin(), leaves.end());
    return p;
}

std::string APForm::fingerprint() const {
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "modes=" + std::to_string(modes) + " perm=[" + list(permutation()) + "] L=[" + matrix_to_string(L) +
           "] phi=[" + matrix_to_string(phi) + "] mu=[" + vector_to_string(mu) + "] x=[" + vector_to_string(xshift) +
           "]";
}

APForm ap_form(const LagrangianRelation& state) {
    require(state.in() == 0, ErrorKind::NotAState, "AP form is defined for states; bend the inputs first");
    require(!state.is_empty(), ErrorKind::EmptyRelation, "AP form of an empty relation");
    const std::size_t n = state.out();
    const Relation& rel = state.affine();
    const Matrix<Q>& c = rel.constraints();
    require(c.rows() == n, ErrorKind::NotLagrangian, "state does not have n independent constraints");
    APForm ap;
    ap.modes = n;
    std::vector<bool> is_vertex(n, false);
    std::size_t k = 0;
    for (auto p : rel.pivots()) {
        if (p < n) {
            is_vertex[p] = true;
            ap.vertices.push_back(p);
            ++k;
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!is_vertex[j]) ap.leaves.push_back(j);
    const std::size_t nl = n - k;
    auto top = range(0, k), bottom = range(k, n), all = range(0, 2 * n);
    std::vector<std::size_t> leaf_x, vertex_x;
    for (auto j : ap.leaves) leaf_x.push_back(n + j);
    for (auto j : ap.vertices) vertex_x.push_back(n + j);
    Vector<Q> rhs_top(rel.rhs().begin(), rel.rhs().begin() + k), rhs_bottom(rel.rhs().begin() + k, rel.rhs().end());

    Matrix<Q> d = c.submatrix(bottom, leaf_x);
    require(rank(d) == nl, ErrorKind::NotLagrangian, "leaf block of the generator matrix is singular");
    Matrix<Q> dinv = inverse(d);
    Matrix<Q> b = dinv * c.submatrix(bottom, all);
    Vector<Q> rb = dinv * rhs_bottom;

    Matrix<Q> t = c.submatrix(top, all);
    Matrix<Q> coupling = t.submatrix(top, leaf_x);
    t -= coupling * b;
    Vector<Q> shift = coupling * rb;
    Vector<Q> rt(k);
    for (std::size_t i = 0; i < k; ++i) rt[i] = rhs_top[i] - shift[i];

    ap.L = t.submatrix(top, ap.leaves);
    ap.phi = -t.submatrix(top, vertex_x);
    ap.mu = Vector<Q>(k);
    for (std::size_t i = 0; i < k; ++i) ap.mu[i] = -rt[i];
    ap.xshift = rb;
    require(b.submatrix(range(0, nl), vertex_x) == -ap.L.transpose(), ErrorKind::NotLagrangian,
            "leaf rows are not tied to the vertex rows by the transpose of L");
    require(ap.phi == ap.phi.transpose(), ErrorKind::NotLagrangian, "vertex phase block is not symmetric");
    return ap;
}

LagrangianRelation from_ap(const APForm& ap) {
    const std::size_t n = ap.modes, k = ap.vertices.size(), nl = ap.leaves.size();
    require(k + nl == n && ap.L.rows() == k && ap.L.cols() == nl && ap.phi.rows() == k && ap.phi.cols() == k &&
                ap.mu.size() == k && ap.xshift.size() == nl,
            ErrorKind::DimensionMismatch, "inconsistent AP form");
    Matrix<Q> g(n, 2 * n);
    Vector<Q> rhs(n);
    for (std::size_t i = 0; i < k; ++i) {
        g(i, ap.vertices[i]) = Q(1);
        for (std::size_t j = 0; j < nl; ++j) g(i, ap.leaves[j]) = ap.L(i, j);
        for (std::size_t j = 0; j < k; ++j) g(i, n + ap.vertices[j]) = -ap.phi(i, j);
        rhs[i] = -ap.mu[i];
    }
    for (std::size_t j = 0; j < nl; ++j) {
        g(k + j, n + ap.leaves[j]) = Q(1);
        for (std::size_t i = 0; i < k; ++i) g(k + j, n + ap.vertices[i]) = -ap.L(i, j);
        rhs[k + j] = ap.xshift[j];
    }
    return LagrangianRelation::from_constraints(0, n, g, rhs);
}

APForm canonical_ap(const LagrangianRelation& r) { return ap_form(r.in() == 0 ? r : name(r)); }

std::string fingerprint(const LagrangianRelation& r) {
    std::string head = std::to_string(r.in()) + "->" + std::to_string(r.out()) + " ";
    if (r.is_empty()) return head + "EMPTY";
    return head + canonical_ap(r).fingerprint();
}

std::optional<Vector<Q>> real_point(const Relation& r) {
    if (r.is_empty()) return std::nullopt;
    const Matrix<Q>& c = r.constraints();
    Matrix<Q> stacked = vstack(real_part(c), imag_part(c));
    Vector<Q> rhs = concat(real_part(r.rhs()), imag_part(r.rhs()));
    return solve_affine(stacked, rhs);
}

bool has_real_point(const Relation& r) { return real_point(r).has_value(); }

bool positive_by_ap(const LagrangianRelation& r) {
    if (r.is_empty()) return true;
    APForm ap = canonical_ap(r);
    if (!is_real(ap.L)) return false;
    if (!is_psd(imag_part(ap.phi))) return false;
    return has_real_point(r.affine());
}

bool positive_by_form(const LagrangianRelation& r) {
    if (r.is_empty()) return true;
    Matrix<Q> k = r.affine().linear_basis();
    Matrix<Q> h = k.adjoint() * (Q::i() * twisted_form(r.in(), r.out())) * k;
    if (!is_psd(h)) return false;
    return has_real_point(r.affine());
}

bool is_positive(const LagrangianRelation& r) {
    bool a = positive_by_ap(r);
    bool b = positive_by_form(r);
    require(a == b, ErrorKind::InternalDisagreement, "AP-invariant and Hermitian-form positivity tests disagree");
    return a;
}

bool is_quasi_real(const LagrangianRelation& r) {
    if (r.is_empty()) return true;
    if (!is_positive(r)) return false;
    return real_part(canonical_ap(r).phi).is_zero();
}

bool is_symplectic(const Matrix<Q>& s) {
    require(s.is_square() && s.rows() % 2 == 0, ErrorKind::DimensionMismatch, "symplectic test needs a 2n x 2n matrix");
    Matrix<Q> omega = symplectic_form<Q>(s.rows() / 2);
    return s.transpose() * omega * s == omega;
}

Matrix<Q> sp_diag(const Matrix<Q>& a) { return direct_sum(a, inverse(a).transpose()); }

Matrix<Q> sp_shear_upper(const Matrix<Q>& b) {
    const std::size_t n = b.rows();
    Matrix<Q> m = Matrix<Q>::identity(2 * n);
    m.set_block(0, n, b);
    return m;
}

Matrix<Q> sp_shear_lower(const Matrix<Q>& b) {
    const std::size_t n = b.rows();
    Matrix<Q> m = Matrix<Q>::identity(2 * n);
    m.set_block(n, 0, b);
    return m;
}

Matrix<Q> sp_fourier(std::size_t n) { return symplectic_form<Q>(n); }

Matrix<Q> unitary_symplectic(const Matrix<Q>& c, const Matrix<Q>& s) {
    return block_matrix<Q>({{c, -s}, {s, c}});
}

Matrix<Q> symplectic_rotation(const CirclePoint& p) {
    return Matrix<Q>::from_rows({{Q(p.c()), Q(-p.s())}, {Q(p.s()), Q(p.c())}});
}

Matrix<Q> symplectic_rotation(const Rational& c, const Rational& s) { return symplectic_rotation(CirclePoint(c, s)); }

Matrix<Q> orthogonal_rotation(const CirclePoint& p) {
    Matrix<Q> r = symplectic_rotation(p);
    return direct_sum(r, r);
}

LagrangianRelation graph(const Matrix<Q>& s, const Vector<Q>& shift) {
    require(s.is_square() && s.rows() % 2 == 0 && shift.size() == s.rows(), ErrorKind::DimensionMismatch,
            "graph of a 2n x 2n matrix with a 2n shift");
    require(is_symplectic(s), ErrorKind::NotSymplectic, "matrix is not symplectic");
    const std::size_t n = s.rows() / 2;
    Matrix<Q> c = hstack(-s, Matrix<Q>::identity(2 * n));
    return LagrangianRelation::trusted(n, n, Relation::from_constraints(2 * n, 2 * n, c, shift));
}

LagrangianRelation graph(const Matrix<Q>& s) { return graph(s, Vector<Q>(s.rows(), Q(0))); }

LagrangianRelation translation(const Vector<Q>& shift) {
    return graph(Matrix<Q>::identity(shift.size()), shift);
}

std::optional<std::pair<Matrix<Q>, Vector<Q>>> graph_matrix(const LagrangianRelation& r) {
    if (r.is_empty() || r.in() != r.out()) return std::nullopt;
    const std::size_t w = 2 * r.in();
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < w; ++k) perm.push_back(w + k);
    for (std::size_t k = 0; k < w; ++k) perm.push_back(k);
    Relation flipped = r.affine().permute_coordinates(perm, w);
    const auto& piv = flipped.pivots();
    if (piv.size() != w) return std::nullopt;
    for (std::size_t k = 0; k < w; ++k)
        if (piv[k] != k) return std::nullopt;
    Matrix<Q> s = -flipped.constraints().block(0, w, w, w);
    return std::make_pair(s, flipped.rhs());
}

}  // namespace lagrel

namespace lagrel {

namespace {

// Scalar spider with no legs: b t = a for some t.
LagrangianRelation legless_spider(const Q& a, const Q& b) {
    if (!b.is_zero() || a.is_zero()) return LagrangianRelation::identity(0);
    return LagrangianRelation::empty(0, 0);
}

}  // namespace

LagrangianRelation grey_spider(std::size_t in, std::size_t out, const Q& a, const Q& b) {
    const std::size_t d = in + out;
    if (d == 0) return legless_spider(a, b);
    Matrix<Q> c(d, 2 * d);
    Vector<Q> rhs(d, Q(0));
    for (std::size_t k = 1; k < d; ++k) {
        c(k - 1, d) = Q(1);
        c(k - 1, d + k) = Q(-1);
    }
    for (std::size_t k = 0; k < d; ++k) c(d - 1, k) = Q(-1);
    c(d - 1, d) += b;
    rhs[d - 1] = a;
    return unname(LagrangianRelation::from_constraints(0, d, c, rhs), in);
}

LagrangianRelation white_spider(std::size_t in, std::size_t out, const Q& a, const Q& b) {
    const std::size_t d = in + out;
    if (d == 0) return legless_spider(a, b);
    Matrix<Q> c(d, 2 * d);
    Vector<Q> rhs(d, Q(0));
    for (std::size_t k = 1; k < d; ++k) {
        c(k - 1, 0) = Q(1);
        c(k - 1, k) = Q(-1);
    }
    for (std::size_t k = 0; k < d; ++k) c(d - 1, d + k) = Q(1);
    c(d - 1, 0) += b;
    rhs[d - 1] = a;
    return unname(LagrangianRelation::from_constraints(0, d, c, rhs), in);
}

LagrangianRelation fourier() { return graph(sp_fourier(1)); }

LagrangianRelation fourier_inverse() { return graph(-sp_fourier(1)); }

LagrangianRelation squeeze(const Q& c) {
    Matrix<Q> g(2, 4);
    g(0, 1) = -c;
    g(0, 3) = Q(1);
    g(1, 0) = Q(1);
    g(1, 2) = -c;
    return LagrangianRelation::from_constraints(1, 1, g, {Q(0), Q(0)});
}

LagrangianRelation vacuum() {
    Matrix<Q> g(1, 2);
    g(0, 0) = Q(1);
    g(0, 1) = -Q::i();
    return LagrangianRelation::from_constraints(0, 1, g, {Q(0)});
}

}  // namespace lagrel
