#include "lagrel/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace lagrel {

namespace {

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
    std::vector<std::size_t> v(end - begin);
    std::iota(v.begin(), v.end(), begin);
    return v;
}

// Exchanges the z and x blocks of an n-mode state.
Relation swap_zx(const Relation& r, std::size_t n) {
    std::vector<std::size_t> perm;
    for (std::size_t j = 0; j < n; ++j) perm.push_back(n + j);
    for (std::size_t j = 0; j < n; ++j) perm.push_back(j);
    return signed_permute(r, perm, std::vector<int>(2 * n, 1), 0);
}

Matrix<Q> times_i(const Matrix<Q>& m) { return Q::i() * m; }

void require_square_symmetric(const Matrix<Q>& m, const char* what) {
    require(m.is_square(), ErrorKind::DimensionMismatch, std::string(what) + " is not square");
    require(is_symmetric(m), ErrorKind::NotSymmetric, std::string(what) + " is not symmetric");
}

}  // namespace

GaussMap GaussMap::make(const Matrix<Q>& a, const Matrix<Q>& sigma, const Vector<Q>& mu) {
    require(sigma.rows() == a.rows() && mu.size() == a.rows(), ErrorKind::DimensionMismatch,
            "covariance and mean must match the output dimension");
    require_square_symmetric(sigma, "covariance");
    require(is_real(a) && is_real(sigma) && is_real(mu), ErrorKind::NotInFragment,
            "Gaussian maps have real coefficients");
    require(is_psd(sigma), ErrorKind::NotPositive, "covariance is not positive semidefinite");
    return GaussMap{a, sigma, mu};
}

GaussMap GaussMap::identity(std::size_t n) {
    return GaussMap{Matrix<Q>::identity(n), Matrix<Q>(n, n), Vector<Q>(n, Q(0))};
}

GaussMap GaussMap::distribution(const Matrix<Q>& sigma, const Vector<Q>& mu) {
    return make(Matrix<Q>(sigma.rows(), 0), sigma, mu);
}

GaussMap gauss_compose(const GaussMap& g, const GaussMap& h) {
    require(g.out() == h.in(), ErrorKind::DimensionMismatch, "Gaussian maps do not compose");
    const Matrix<Q>& b = h.A;
    return GaussMap{b * g.A, h.sigma + b * g.sigma * b.transpose(), h.mu + b * g.mu};
}

GaussMap gauss_tensor(const GaussMap& g, const GaussMap& h) {
    return GaussMap{direct_sum(g.A, h.A), direct_sum(g.sigma, h.sigma), concat(g.mu, h.mu)};
}

LagrangianRelation to_gaussrel(const GaussMap& g) {
    const std::size_t n = g.in(), m = g.out();
    const std::size_t z_in = 0, x_in = n, z_out = 2 * n, x_out = 2 * n + m;
    Matrix<Q> c(n + m, 2 * (n + m));
    Vector<Q> rhs(n + m, Q(0));
    for (std::size_t i = 0; i < m; ++i) {
        c(i, x_out + i) = Q(1);
        for (std::size_t j = 0; j < n; ++j) c(i, x_in + j) = -g.A(i, j);
        for (std::size_t j = 0; j < m; ++j) c(i, z_out + j) = Q::i() * g.sigma(i, j);
        rhs[i] = g.mu[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        c(m + j, z_in + j) = Q(1);
        for (std::size_t i = 0; i < m; ++i) c(m + j, z_out + i) = -g.A(i, j);
    }
    return LagrangianRelation::from_constraints(n, m, c, rhs);
}

GaussMap from_gaussrel(const LagrangianRelation& r) {
    require(!r.is_empty(), ErrorKind::NotInFragment, "the empty relation is not a Gaussian map");
    const std::size_t n = r.in(), m = r.out();
    std::vector<std::size_t> perm;
    for (std::size_t j = 0; j < m; ++j) perm.push_back(2 * n + m + j);
    for (std::size_t j = 0; j < n; ++j) perm.push_back(j);
    for (std::size_t j = 0; j < n; ++j) perm.push_back(n + j);
    for (std::size_t j = 0; j < m; ++j) perm.push_back(2 * n + j);
    Relation p = r.affine().permute_coordinates(perm, 0);
    const Matrix<Q>& c = p.constraints();
    require(p.pivots() == range(0, n + m), ErrorKind::NotInFragment,
            "relation is not the graph of a Gaussian map");
    const std::size_t x_in = n + m, z_out = 2 * n + m;
    Matrix<Q> a = -c.block(0, x_in, m, n);
    Matrix<Q> sigma = -Q::i() * c.block(0, z_out, m, m);
    Vector<Q> mu(p.rhs().begin(), p.rhs().begin() + m);
    bool dual_ok = c.block(m, x_in, n, n).is_zero() && c.block(m, z_out, n, m) == -a.transpose();
    for (std::size_t j = 0; j < n; ++j) dual_ok = dual_ok && p.rhs()[m + j].is_zero();
    require(dual_ok, ErrorKind::NotInFragment, "momentum part is not the transpose of the mean map");
    require(is_real(a) && is_real(sigma) && is_real(mu) && is_symmetric(sigma) && is_psd(sigma),
            ErrorKind::NotInFragment, "noise part is not a real Gaussian");
    return GaussMap{a, sigma, mu};
}

Matrix<Q> ExtendedGaussian::quotient() const {
    Matrix<Q> e(vertices.size(), modes);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        e(i, vertices[i]) = Q(1);
        for (std::size_t j = 0; j < leaves.size(); ++j) e(i, leaves[j]) = L(i, j);
    }
    return e;
}

Matrix<Q> ExtendedGaussian::fibre() const { return kernel(quotient()); }

ExtendedGaussian extract_extended_gaussian(const LagrangianRelation& state) {
    require(state.is_state(), ErrorKind::NotAState, "extended Gaussians are read from states");
    require(!state.is_empty(), ErrorKind::EmptyRelation, "the empty relation has no distribution");
    require(is_quasi_real(state), ErrorKind::NotQuasiReal, "state is not quasi-real");
    const std::size_t n = state.out();
    APForm dual = ap_form(LagrangianRelation::trusted(0, n, swap_zx(state.affine(), n)));
    ExtendedGaussian g;
    g.modes = n;
    g.vertices = dual.vertices;
    g.leaves = dual.leaves;
    g.L = dual.L;
    g.sigma = times_i(dual.phi);
    g.mu = -dual.mu;
    g.dual_shift = dual.xshift;
    require(is_real(g.L) && is_real(g.sigma), ErrorKind::InternalDisagreement,
            "quasi-real state has a complex dual AP form");
    require(is_real(g.mu) && is_real(g.dual_shift), ErrorKind::NotInFragment,
            "state is displaced off the real Gaussian fragment");
    return g;
}

LagrangianRelation to_gaussrel(const ExtendedGaussian& g) {
    APForm dual;
    dual.modes = g.modes;
    dual.vertices = g.vertices;
    dual.leaves = g.leaves;
    dual.L = g.L;
    dual.phi = -times_i(g.sigma);
    dual.mu = -g.mu;
    dual.xshift = g.dual_shift;
    const std::size_t n = g.modes;
    return LagrangianRelation::trusted(0, n, swap_zx(from_ap(dual).affine(), n));
}

PhaseMatrix PhaseMatrix::make(const Matrix<Q>& phi, const Vector<Q>& displacement) {
    require_square_symmetric(phi, "phase matrix");
    require(displacement.size() == 2 * phi.rows(), ErrorKind::DimensionMismatch, "displacement length is not 2n");
    require(is_real(displacement), ErrorKind::NotInFragment, "displacement must be real");
    require(is_pd(imag_part(phi)), ErrorKind::NotPositiveDefinite, "imaginary part of the phase matrix is not > 0");
    return PhaseMatrix{phi, displacement};
}

PhaseMatrix PhaseMatrix::make(const Matrix<Q>& phi) { return make(phi, Vector<Q>(2 * phi.rows(), Q(0))); }

Vector<Q> PhaseMatrix::s() const { return Vector<Q>(displacement.begin(), displacement.begin() + modes()); }
Vector<Q> PhaseMatrix::t() const { return Vector<Q>(displacement.begin() + modes(), displacement.end()); }

Matrix<Q> phase_to_covariance(const Matrix<Q>& phi) {
    PhaseMatrix::make(phi);
    Matrix<Q> u = real_part(phi), v = imag_part(phi);
    Matrix<Q> vinv = inverse(v);
    return block_matrix<Q>({{v + u * vinv * u, -(u * vinv)}, {-(vinv * u), vinv}});
}

PhaseMatrix covariance_to_phase(const Matrix<Q>& delta) {
    require(delta.is_square() && delta.rows() % 2 == 0, ErrorKind::NotAQuantumCovariance,
            "covariance must be a square matrix of even size");
    require(is_real(delta) && is_symmetric(delta), ErrorKind::NotAQuantumCovariance,
            "covariance must be real symmetric");
    require(determinant(delta) == Q(1), ErrorKind::NotAQuantumCovariance, "covariance determinant is not 1");
    const std::size_t n = delta.rows() / 2;
    require(is_psd(delta + Q::i() * symplectic_form<Q>(n)), ErrorKind::NotAQuantumCovariance,
            "covariance violates the uncertainty relation");
    Matrix<Q> b = delta.block(0, n, n, n), c = delta.block(n, n, n, n);
    require(rank(c) == n, ErrorKind::NotAQuantumCovariance, "momentum block is singular");
    Matrix<Q> cinv = inverse(c);
    PhaseMatrix p = PhaseMatrix::make(-(b * cinv) + times_i(cinv));
    require(phase_to_covariance(p.phi) == delta, ErrorKind::NotAQuantumCovariance, "covariance is not pure");
    return p;
}

QuantumGaussian quantum_gaussian(const PhaseMatrix& p) {
    Matrix<Q> u = real_part(p.phi), v = imag_part(p.phi);
    Matrix<Q> vinv = inverse(v);
    return QuantumGaussian{block_matrix<Q>({{v + u * vinv * u, u * vinv}, {vinv * u, vinv}}), p.displacement};
}

PhaseMatrix phase_matrix(const QuantumGaussian& g) {
    const std::size_t n = g.modes();
    require(g.covariance.rows() == 2 * n && g.covariance.is_square() && g.mean.size() == 2 * n,
            ErrorKind::DimensionMismatch, "covariance record shape");
    Matrix<Q> b = g.covariance.block(0, n, n, n), c = g.covariance.block(n, n, n, n);
    require(rank(c) == n, ErrorKind::NotAQuantumCovariance, "position block is singular");
    Matrix<Q> v = inverse(c);
    PhaseMatrix p = PhaseMatrix::make(b * v + times_i(v), g.mean);
    require(quantum_gaussian(p).covariance == g.covariance, ErrorKind::NotAQuantumCovariance,
            "covariance record is not a pure Gaussian state");
    return p;
}

namespace {

LagrangianRelation phase_relation(const Matrix<Q>& phi, const Vector<Q>& s, const Vector<Q>& t, bool as_effect) {
    const std::size_t n = phi.rows();
    Matrix<Q> c = hstack(Matrix<Q>::identity(n), -phi);
    Vector<Q> rhs = s - phi * t;
    return as_effect ? LagrangianRelation::from_constraints(n, 0, c, rhs)
                     : LagrangianRelation::from_constraints(0, n, c, rhs);
}

}  // namespace

LagrangianRelation qgauss_state(const PhaseMatrix& p) { return phase_relation(p.phi, p.s(), p.t(), false); }

LagrangianRelation qgauss_effect(const PhaseMatrix& p) { return phase_relation(p.phi.conj(), p.s(), p.t(), true); }

LagrangianRelation qgauss_unitary(const Matrix<Q>& s, const Vector<Q>& shift) {
    require(is_real(s) && is_real(shift), ErrorKind::NotInFragment, "Gaussian unitaries are real");
    LagrangianRelation g = graph(s, shift);
    require(is_positive(g), ErrorKind::NotPositive, "real symplectic graph failed the positivity check");
    return g;
}

QuantumGaussian qgauss_act(const QuantumGaussian& state, const Matrix<Q>& s, const Vector<Q>& shift) {
    require(s.rows() == state.covariance.rows() && shift.size() == state.mean.size(), ErrorKind::DimensionMismatch,
            "unitary and state sizes differ");
    require(is_symplectic(s), ErrorKind::NotSymplectic, "matrix is not symplectic");
    return QuantumGaussian{s * state.covariance * s.transpose(), s * state.mean + shift};
}

QuantumGaussian qgauss_project(const QuantumGaussian& state, const QuantumGaussian& effect) {
    const std::size_t total = state.modes(), n = effect.modes();
    require(n <= total, ErrorKind::DimensionMismatch, "effect has more modes than the state");
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < n; ++j) order.push_back(j);
    for (std::size_t j = 0; j < n; ++j) order.push_back(total + j);
    for (std::size_t j = n; j < total; ++j) order.push_back(j);
    for (std::size_t j = n; j < total; ++j) order.push_back(total + j);
    Vector<Q> mean(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) mean[k] = state.mean[order[k]];
    auto [cov, mu] = schur_project(state.covariance.submatrix(order, order), 2 * n, effect.covariance, mean,
                                   effect.mean);
    return QuantumGaussian{cov, mu};
}

LagrangianRelation double_state(const QuantumGaussian& g) {
    return to_gaussrel(GaussMap::distribution(g.covariance, g.mean));
}

double wigner_density_at(const PhaseMatrix& p, const std::vector<double>& point) {
    const std::size_t n = p.modes();
    require(point.size() == 2 * n, ErrorKind::DimensionMismatch, "phase-space point length is not 2n");
    Matrix<Q> sigma = phase_to_covariance(p.phi);
    Vector<Q> t = p.t(), s = p.s();
    std::vector<double> d(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = point[j] - t[j].re().to_double();
        d[n + j] = point[n + j] - s[j].re().to_double();
    }
    double form = 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) form += d[i] * sigma(i, j).re().to_double() * d[j];
    return std::exp(-form) / std::pow(std::numbers::pi, static_cast<double>(n));
}

}  // namespace lagrel
