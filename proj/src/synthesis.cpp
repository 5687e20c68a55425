#include "lagrel/synthesis.hpp"

#include <array>
#include <optional>

#include "lagrel/gaussian.hpp"

namespace lagrel {

namespace {

// Four squares summing to n, searched greedily from the largest candidates.
std::optional<std::array<mpz_class, 4>> four_squares(const mpz_class& n) {
    if (n > mpz_class(1) << 40) return std::nullopt;
    const int budget = 64;
    mpz_class a = sqrt(n);
    for (int ia = 0; ia < budget && a >= 0; ++ia, --a) {
        mpz_class r1 = n - a * a;
        mpz_class b = sqrt(r1);
        for (int ib = 0; ib < budget && b >= 0; ++ib, --b) {
            mpz_class r2 = r1 - b * b;
            mpz_class c = sqrt(r2);
            for (int ic = 0; ic < budget && c >= 0; ++ic, --c) {
                mpz_class r3 = r2 - c * c;
                if (mpz_perfect_square_p(r3.get_mpz_t())) return std::array<mpz_class, 4>{a, b, c, sqrt(r3)};
            }
        }
    }
    return std::nullopt;
}

void connect_gadget(Diagram& d, const Endpoint& from, const Endpoint& to, const Q& w) {
    std::size_t f = d.add_node(NodeKind::Fourier);
    std::size_t s = d.squeeze(w.inverse());
    d.connect(from, Endpoint::at(f, 0));
    d.connect(Endpoint::at(f, 1), Endpoint::at(s, 0));
    d.connect(Endpoint::at(s, 1), to);
}

// Adds i w w^T to the phase of the given vertex spiders for every rank-one term of v.
void add_vacuum_terms(Diagram& d, const std::vector<std::size_t>& vertex_nodes, const Matrix<Q>& v) {
    for (const Vector<Q>& w : rank_one_terms(v)) {
        std::vector<std::size_t> support;
        for (std::size_t k = 0; k < w.size(); ++k)
            if (!w[k].is_zero()) support.push_back(k);
        if (support.empty()) continue;
        if (support.size() == 1) {
            const std::size_t k = support.front();
            std::size_t vac = d.add_node(NodeKind::Vacuum);
            if (w[k] == Q(1) || w[k] == Q(-1)) {
                d.connect(d.leg(vertex_nodes[k]), Endpoint::at(vac, 0));
            } else {
                connect_gadget(d, d.leg(vertex_nodes[k]), Endpoint::at(vac, 0), w[k]);
            }
            continue;
        }
        std::size_t hub = d.grey();
        std::size_t vac = d.add_node(NodeKind::Vacuum);
        d.connect(d.leg(hub), Endpoint::at(vac, 0));
        for (std::size_t k : support) add_edge_gadget(d, vertex_nodes[k], hub, w[k]);
    }
}

// Diagram of a state from its AP data: grey vertices with phases (mu_v, phase_vv), edge
// gadgets for the off-diagonal phases, and white leaves fed through squeezes by -L.
Diagram ap_diagram(const APForm& ap, const Matrix<Q>& phase, std::vector<std::size_t>* vertex_nodes) {
    Diagram d(0, ap.modes);
    const std::size_t k = ap.vertices.size();
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t v = d.grey(ap.mu[i], phase(i, i));
        d.connect(d.leg(v), Endpoint::output(ap.vertices[i]));
        nodes.push_back(v);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!phase(i, j).is_zero()) add_edge_gadget(d, nodes[i], nodes[j], phase(i, j));
    for (std::size_t l = 0; l < ap.leaves.size(); ++l) {
        std::size_t leaf = d.white(ap.xshift[l]);
        d.connect(d.leg(leaf), Endpoint::output(ap.leaves[l]));
        for (std::size_t i = 0; i < k; ++i)
            if (!ap.L(i, l).is_zero()) d.through(nodes[i], d.squeeze(-ap.L(i, l)), leaf);
    }
    if (vertex_nodes) *vertex_nodes = nodes;
    return d;
}

// Discards every input, prepares every output and adds the empty scalar.
Diagram empty_diagram(std::size_t in, std::size_t out) {
    Diagram d(in, out);
    for (std::size_t k = 0; k < in; ++k) d.connect(Endpoint::input(k), d.leg(d.grey()));
    for (std::size_t k = 0; k < out; ++k) d.connect(d.leg(d.grey()), Endpoint::output(k));
    d.white(Q(1));
    return d;
}

Vector<Q> require_real_point(const LagrangianRelation& state, const char* calculus) {
    auto p = real_point(state.affine());
    require(p.has_value(), ErrorKind::NotInFragment, std::string("relation has no real point, so it is not in ") + calculus);
    return *p;
}

LagrangianRelation linear_part(const LagrangianRelation& state) {
    const Relation& r = state.affine();
    return LagrangianRelation::trusted(0, state.out(),
                                       Relation::from_constraints(0, r.width(), r.constraints(),
                                                                  Vector<Q>(r.constraints().rows(), Q(0))));
}

Diagram with_translation(const Diagram& d, const Vector<Q>& shift) {
    for (const Q& s : shift)
        if (!s.is_zero()) return d.compose(translation_diagram(shift));
    return d;
}

Diagram gsa_state(const LagrangianRelation& state) {
    APForm ap = ap_form(state);
    return ap_diagram(ap, ap.phi, nullptr);
}

Diagram gqga_state(const LagrangianRelation& state) {
    require(is_positive(state), ErrorKind::NotInFragment, "relation is not positive");
    Vector<Q> point = require_real_point(state, "GQGA");
    APForm ap = ap_form(linear_part(state));
    require(is_real(ap.L), ErrorKind::InternalDisagreement, "positive state with a complex L block");
    std::vector<std::size_t> vertex_nodes;
    Diagram d = ap_diagram(ap, real_part(ap.phi), &vertex_nodes);
    add_vacuum_terms(d, vertex_nodes, imag_part(ap.phi));
    return with_translation(d, point);
}

Diagram gga_state(const LagrangianRelation& state) {
    require(is_quasi_real(state), ErrorKind::NotInFragment, "relation is not quasi-real");
    Vector<Q> point = require_real_point(state, "GGA");
    ExtendedGaussian g = extract_extended_gaussian(linear_part(state));
    std::vector<Vector<Q>> terms = rank_one_terms(g.sigma);
    const std::size_t k = g.vertices.size(), t = terms.size();
    Matrix<Q> w(k, t);
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < k; ++i) w(i, j) = terms[j][i];
    Diagram vacua(0, t);
    for (std::size_t j = 0; j < t; ++j)
        vacua.connect(Endpoint::at(vacua.add_node(NodeKind::Vacuum), 0), Endpoint::output(j));
    Diagram d = vacua.compose(matrix_diagram(w)).compose(matrix_diagram(g.quotient()).converse());
    return with_translation(d, point);
}

}  // namespace

std::vector<Rational> rational_squares(const Rational& d) {
    require(d.sign() >= 0, ErrorKind::NotPositive, "a negative number is not a sum of squares");
    if (d.is_zero()) return {};
    const mpz_class p = d.numerator(), q = d.denominator();
    if (mpz_perfect_square_p(p.get_mpz_t()) && mpz_perfect_square_p(q.get_mpz_t()))
        return {Rational(mpq_class(sqrt(p), sqrt(q)))};
    const mpz_class n = p * q;
    std::vector<Rational> out;
    if (auto sq = four_squares(n)) {
        for (const mpz_class& s : *sq)
            if (s != 0) out.push_back(Rational(mpq_class(s, q)));
        return out;
    }
    // n = sum of bits 2^j, and 2^j is (2^(j/2))^2 or twice (2^((j-1)/2))^2.
    for (std::size_t j = 0; j < mpz_sizeinbase(n.get_mpz_t(), 2); ++j) {
        if (!mpz_tstbit(n.get_mpz_t(), j)) continue;
        mpz_class base = mpz_class(1) << (j / 2);
        Rational r(mpq_class(base, q));
        out.push_back(r);
        if (j % 2 == 1) out.push_back(r);
    }
    return out;
}

std::vector<Vector<Q>> rank_one_terms(const Matrix<Q>& v) {
    require(is_real(v), ErrorKind::NotInFragment, "expected a real matrix");
    LdlResult f = ldl_hermitian(v);
    require(f.psd, ErrorKind::NotPositive, "matrix is not positive semidefinite");
    std::vector<Vector<Q>> terms;
    for (std::size_t j = 0; j < f.pivots.size(); ++j) {
        for (const Rational& r : rational_squares(f.pivots[j])) {
            Vector<Q> w = f.columns[j];
            for (Q& x : w) x = Q(r) * x;
            terms.push_back(std::move(w));
        }
    }
    return terms;
}

Diagram matrix_diagram(const Matrix<Q>& a) {
    const std::size_t k = a.rows(), n = a.cols();
    Diagram d(n, k);
    std::vector<std::size_t> copies, sums;
    for (std::size_t j = 0; j < n; ++j) {
        copies.push_back(d.grey());
        d.connect(Endpoint::input(j), d.leg(copies.back()));
    }
    for (std::size_t i = 0; i < k; ++i) {
        sums.push_back(d.white());
        d.connect(d.leg(sums.back()), Endpoint::output(i));
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a(i, j).is_zero()) d.through(copies[j], d.squeeze(-a(i, j)), sums[i]);
    return d;
}

Diagram translation_diagram(const Vector<Q>& shift) {
    require(shift.size() % 2 == 0, ErrorKind::DimensionMismatch, "translation needs a (z, x) vector");
    require(is_real(shift), ErrorKind::NotInFragment, "translations are real");
    const std::size_t n = shift.size() / 2;
    Diagram d(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Endpoint end = Endpoint::input(j);
        if (!shift[j].is_zero()) {
            std::size_t g = d.grey(-shift[j]);
            d.connect(end, d.leg(g));
            end = d.leg(g);
        }
        if (!shift[n + j].is_zero()) {
            std::size_t flip = d.white();
            std::size_t back = d.white(shift[n + j]);
            d.connect(end, d.leg(flip));
            d.link(flip, back);
            end = d.leg(back);
        }
        d.connect(end, Endpoint::output(j));
    }
    return d;
}

void add_edge_gadget(Diagram& d, std::size_t u, std::size_t v, const Q& w) {
    require(!w.is_zero(), ErrorKind::DivisionByZero, "edge gadget weight must be nonzero");
    connect_gadget(d, d.leg(u), d.leg(v), w);
}

Diagram synthesize_normal_form(const LagrangianRelation& r, Calculus calculus) {
    if (r.is_empty()) return empty_diagram(r.in(), r.out());
    LagrangianRelation state = name(r);
    Diagram d;
    switch (calculus) {
        case Calculus::GSA: d = gsa_state(state); break;
        case Calculus::GQGA: d = gqga_state(state); break;
        case Calculus::GGA: d = gga_state(state); break;
        case Calculus::GAA:
            fail(ErrorKind::NotInFragment, "GAA diagrams denote affine relations; use synthesize_affine");
    }
    return r.in() == 0 ? d : d.unbend(r.in());
}

Diagram synthesize_affine(const Relation& r) {
    require(is_real(r.constraints()) && is_real(r.rhs()), ErrorKind::NotInFragment, "GAA relations are real");
    const std::size_t w = r.width();
    if (r.is_empty()) return empty_diagram(r.dom(), r.cod());
    Matrix<Q> basis = r.linear_basis();
    Vector<Q> p = r.shift();
    Diagram free(0, basis.cols());
    for (std::size_t t = 0; t < basis.cols(); ++t) free.connect(free.leg(free.grey()), Endpoint::output(t));
    Diagram shift(w, w);
    for (std::size_t j = 0; j < w; ++j) {
        if (p[j].is_zero()) {
            shift.connect(Endpoint::input(j), Endpoint::output(j));
            continue;
        }
        std::size_t flip = shift.white();
        std::size_t back = shift.white(p[j]);
        shift.connect(Endpoint::input(j), shift.leg(flip));
        shift.link(flip, back);
        shift.connect(shift.leg(back), Endpoint::output(j));
    }
    Diagram d = free.compose(matrix_diagram(basis)).compose(shift);
    return r.dom() == 0 ? d : d.unbend(r.dom());
}

Diagram import_graph_state(const Matrix<Q>& u, const Matrix<Q>& v) {
    require(u.is_square() && v.is_square() && u.rows() == v.rows(), ErrorKind::DimensionMismatch,
            "U and V must be square of the same size");
    require(is_real(u) && is_real(v) && is_symmetric(u) && is_symmetric(v), ErrorKind::NotSymmetric,
            "U and V must be real symmetric");
    require(is_pd(v), ErrorKind::NotPositiveDefinite, "V is not positive definite");
    const std::size_t n = u.rows();
    Diagram d(0, n);
    std::vector<std::size_t> vertices;
    for (std::size_t k = 0; k < n; ++k) {
        vertices.push_back(d.grey(Q(0), u(k, k)));
        d.connect(d.leg(vertices.back()), Endpoint::output(k));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!u(i, j).is_zero()) add_edge_gadget(d, vertices[i], vertices[j], u(i, j));
    add_vacuum_terms(d, vertices, v);
    return d;
}

}  // namespace lagrel
