#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lagrel/lagrangian.hpp"

namespace lagrel {

// Gaussian stochastic map n -> m: x |-> A x + noise, noise ~ N(Sigma, mu).
struct GaussMap {
    Matrix<Q> A;
    Matrix<Q> sigma;
    Vector<Q> mu;

    // Checked construction; requires real entries and 0 <= sigma.
    static GaussMap make(const Matrix<Q>& a, const Matrix<Q>& sigma, const Vector<Q>& mu);
    static GaussMap identity(std::size_t n);
    // Gaussian distribution on R^m viewed as a map 0 -> m.
    static GaussMap distribution(const Matrix<Q>& sigma, const Vector<Q>& mu);

    std::size_t in() const { return A.cols(); }
    std::size_t out() const { return A.rows(); }
    friend bool operator==(const GaussMap&, const GaussMap&) = default;
};

// h after g: (BA, Delta + B Sigma B^T, nu + B mu).
GaussMap gauss_compose(const GaussMap& g, const GaussMap& h);
GaussMap gauss_tensor(const GaussMap& g, const GaussMap& h);

// Embedding into Lagrangian relations with x as the data coordinate:
// x_out - A x_in + i Sigma z_out = mu and z_in = A^T z_out.
LagrangianRelation to_gaussrel(const GaussMap& g);
// Inverse of the embedding on its image; throws NotInFragment elsewhere.
GaussMap from_gaussrel(const LagrangianRelation& r);

// Extended Gaussian distribution N(sigma, mu) on the quotient R^n / span(fibre).
// Quotient coordinates are q = E x with E = [I, L] arranged by the vertex/leaf split.
struct ExtendedGaussian {
    std::size_t modes = 0;
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> leaves;
    Matrix<Q> L;
    Matrix<Q> sigma;
    Vector<Q> mu;
    // Shift of the z coordinates along the fibre directions.
    Vector<Q> dual_shift;

    Matrix<Q> quotient() const;
    // Basis of the fibre ker E, columns in reduced echelon form.
    Matrix<Q> fibre() const;
    friend bool operator==(const ExtendedGaussian&, const ExtendedGaussian&) = default;
};

// Reads the x-pivot AP form of a quasi-real state; throws NotQuasiReal otherwise.
ExtendedGaussian extract_extended_gaussian(const LagrangianRelation& state);
LagrangianRelation to_gaussrel(const ExtendedGaussian& g);

// Phase matrix Phi with Im(Phi) > 0 and displacement (s, t): the state
// exp(i s.x) exp(i (x - t)^T Phi (x - t) / 2).
struct PhaseMatrix {
    Matrix<Q> phi;
    Vector<Q> displacement;

    static PhaseMatrix make(const Matrix<Q>& phi, const Vector<Q>& displacement);
    static PhaseMatrix make(const Matrix<Q>& phi);
    std::size_t modes() const { return phi.rows(); }
    Vector<Q> s() const;
    Vector<Q> t() const;
    friend bool operator==(const PhaseMatrix&, const PhaseMatrix&) = default;
};

// Exponent matrix of the Wigner function in (q, p) order:
// [[V + U V^-1 U, -U V^-1], [-V^-1 U, V^-1]] with U = Re Phi, V = Im Phi.
Matrix<Q> phase_to_covariance(const Matrix<Q>& phi);
// Inverse map Phi = -B C^-1 + i C^-1; throws NotAQuantumCovariance.
PhaseMatrix covariance_to_phase(const Matrix<Q>& delta);

// Covariance record of a Gaussian state in the (z, x) coordinates of the relations,
// together with the mean (s, t). Unitaries act by Gamma -> S Gamma S^T.
struct QuantumGaussian {
    Matrix<Q> covariance;
    Vector<Q> mean;

    std::size_t modes() const { return covariance.rows() / 2; }
    friend bool operator==(const QuantumGaussian&, const QuantumGaussian&) = default;
};

QuantumGaussian quantum_gaussian(const PhaseMatrix& p);
PhaseMatrix phase_matrix(const QuantumGaussian& g);

// The state {z - Phi x = s - Phi t}.
LagrangianRelation qgauss_state(const PhaseMatrix& p);
// The effect {z - conj(Phi) x = s - conj(Phi) t} as a relation n -> 0.
LagrangianRelation qgauss_effect(const PhaseMatrix& p);
// Graph of an affine symplectomorphism; throws NotSymplectic.
LagrangianRelation qgauss_unitary(const Matrix<Q>& s, const Vector<Q>& shift);
QuantumGaussian qgauss_act(const QuantumGaussian& state, const Matrix<Q>& s, const Vector<Q>& shift);
// Projects the leading modes of the state onto the effect by the Schur complement.
QuantumGaussian qgauss_project(const QuantumGaussian& state, const QuantumGaussian& effect);

// Doubling embedding: the Gaussian distribution N(Gamma, mean) on 2n wires.
LagrangianRelation double_state(const QuantumGaussian& g);

// Closed-form Wigner density at the point (q, p).
double wigner_density_at(const PhaseMatrix& p, const std::vector<double>& point);

}  // namespace lagrel
